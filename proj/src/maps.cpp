#include "choi/maps.hpp"

#include "choi/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace choi {

CMatrix apply_map(const MapParams& mp, const CMatrix& x)
{
    if (x.dim() != 3) throw Error(ErrorKind::DimensionMismatch, "generalized Choi maps act on 3x3 matrices");
    const auto [al, be, ga] = mp;
    CMatrix out(3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            if (i != j) out(i, j) = -x(i, j);
    const Complex x11 = x(0, 0), x22 = x(1, 1), x33 = x(2, 2);
    out(0, 0) = al * x11 + be * x22 + ga * x33;
    out(1, 1) = ga * x11 + al * x22 + be * x33;
    out(2, 2) = be * x11 + ga * x22 + al * x33;
    return out;
}

CMatrix choi_matrix(const MapParams& mp)
{
    CMatrix c(9);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            CMatrix unit(3);
            unit(i, j) = 1.0;
            const CMatrix block = apply_map(mp, unit);
            for (std::size_t k = 0; k < 3; ++k)
                for (std::size_t l = 0; l < 3; ++l) c(3 * i + k, 3 * j + l) = block(k, l);
        }
    return c;
}

MapParams phi_t(double t)
{
    if (!(t > 0.0) || !std::isfinite(t)) throw Error(ErrorKind::OutOfRange, "Phi(t) requires 0 < t < inf");
    const double d = 1.0 - t + t * t;
    return {(1.0 - t) * (1.0 - t) / d, t * t / d, 1.0 / d};
}

bool is_positive_map(const MapParams& mp, double tol)
{
    const auto [al, be, ga] = mp;
    if (al + be + ga < 2.0 - tol) return false;
    return al > 1.0 || be * ga >= (1.0 - al) * (1.0 - al) - tol;
}

double pairing(const CMatrix& a, const MapParams& mp)
{
    if (a.dim() != 9) throw Error(ErrorKind::DimensionMismatch, "pairing expects a 9x9 matrix");
    const CMatrix c = choi_matrix(mp);
    // Tr(C A^t) = sum_ij C_ij A_ij
    Complex acc{};
    for (std::size_t i = 0; i < 9; ++i)
        for (std::size_t j = 0; j < 9; ++j) acc += c(i, j) * a(i, j);
    return acc.real();
}

double pairing_product(const ProductVector& z, const MapParams& mp)
{
    CMatrix xx(3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) xx(i, j) = z.x[i] * std::conj(z.x[j]);
    const CMatrix image = apply_map(mp, xx);
    const CVec3 ybar = conj(z.y);
    const CVector w = image.apply(ybar);
    // (w | ybar) = sum_i w_i y_i
    Complex acc{};
    for (std::size_t i = 0; i < 3; ++i) acc += w[i] * z.y[i];
    return acc.real();
}

double pairing_closed_form(const StateParams& p, const MapParams& mp)
{
    return 3.0 * (p.a * mp.alpha + p.b * mp.beta + p.c * mp.gamma - 2.0);
}

namespace {

double witness_at(const StateParams& p, double t) { return pairing_closed_form(p, phi_t(t)); }

std::vector<double> positive_roots(double qa, double qb, double qc)
{
    // qa t^2 + qb t + qc = 0
    std::vector<double> roots;
    constexpr double eps = 1e-15;
    if (std::abs(qa) <= eps) {
        if (std::abs(qb) > eps) roots.push_back(-qc / qb);
    } else {
        const double disc = qb * qb - 4.0 * qa * qc;
        if (disc >= 0.0) {
            const double sq = std::sqrt(disc);
            // Stable pairing of the two roots.
            const double q = -0.5 * (qb + (qb >= 0.0 ? sq : -sq));
            if (q != 0.0) {
                roots.push_back(q / qa);
                roots.push_back(qc / q);
            } else {
                roots.push_back(0.0);
            }
        }
    }
    std::vector<double> out;
    for (double r : roots)
        if (r > 0.0 && std::isfinite(r)) out.push_back(r);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

std::vector<double> witness_zero_crossings(const StateParams& p)
{
    return positive_roots(p.a + p.b - 2.0, 2.0 * (1.0 - p.a), p.a + p.c - 2.0);
}

WitnessPoint analytic_witness_minimum(const StateParams& p)
{
    // f(t) = 3 q(t) / (t^2 - t + 1), q(t) = A t^2 + B t + C. Stationary points of
    // q/d solve (A+B) t^2 - 2(A-C) t - (B+C) = 0.
    const double qa = p.a + p.b - 2.0;
    const double qb = 2.0 * (1.0 - p.a);
    const double qc = p.a + p.c - 2.0;

    WitnessPoint best{0.0, 3.0 * qc};
    if (3.0 * qa < best.value) best = {std::numeric_limits<double>::infinity(), 3.0 * qa};
    for (double t : positive_roots(qa + qb, -2.0 * (qa - qc), -(qb + qc))) {
        const double v = witness_at(p, t);
        if (v < best.value) best = {t, v};
    }
    return best;
}

WitnessScan witness_scan(const StateParams& p, int grid, double t_min, double t_max)
{
    if (grid < 2 || !(t_min > 0.0) || !(t_max > t_min))
        throw Error(ErrorKind::OutOfRange, "witness scan needs grid >= 2 and 0 < t_min < t_max");
    WitnessScan scan;
    scan.value = std::numeric_limits<double>::infinity();
    const double log_lo = std::log(t_min);
    const double step = (std::log(t_max) - log_lo) / (grid - 1);
    for (int k = 0; k < grid; ++k) {
        const double t = k + 1 == grid ? t_max : std::exp(log_lo + step * k);
        const double v = witness_at(p, t);
        if (v < scan.value) {
            scan.value = v;
            scan.t_best = t;
        }
    }
    scan.zero_crossings = witness_zero_crossings(p);
    scan.analytic = analytic_witness_minimum(p);
    return scan;
}

} // namespace choi
