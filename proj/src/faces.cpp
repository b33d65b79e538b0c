#include "choi/faces.hpp"

#include "choi/error.hpp"
#include "choi/states.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace choi {

FacePair face_of(const CMatrix& a, double tol)
{
    const EigDecomp eig = hermitian_eig(a);
    const EigDecomp eig_pt = hermitian_eig(partial_transpose(a));
    if (!is_psd(eig, tol) || !is_psd(eig_pt, tol)) throw Error(ErrorKind::NotPPT, "matrix is not PPT");
    return {range_projector(eig, tol), range_projector(eig_pt, tol), rank_of(eig, tol), rank_of(eig_pt, tol)};
}

namespace {

bool in_range(const CMatrix& proj, const CVector& v, double tol)
{
    const CVector pv = proj.apply(v);
    double miss = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) miss += std::norm(v[i] - pv[i]);
    return std::sqrt(miss) <= tol * norm(v);
}

} // namespace

bool q_membership(const ProductVector& z, const FacePair& face, double tol)
{
    return in_range(face.d, z.embed(), tol) && in_range(face.e, z.partial_conjugate().embed(), tol);
}

bool q_membership(const ProductVector& z, const CMatrix& a, double tol) { return q_membership(z, face_of(a), tol); }

QFamily::QFamily(BoundaryTag element, double b) : element_(element), b_(b) {}

int QFamily::branch_count() const
{
    switch (element_) {
    case BoundaryTag::Vb:
    case BoundaryTag::EHatB: return 3;
    case BoundaryTag::F: return 7;
    default: return 1;
    }
}

std::string QFamily::description() const
{
    switch (element_) {
    case BoundaryTag::V1: return "conj(x) (x) x with |x1| = |x2| = |x3|";
    case BoundaryTag::Vb:
    case BoundaryTag::EHatB:
        return "(0, conj x2, b conj x3)(x)(0, x2, x3) | (b conj x1, 0, conj x3)(x)(x1, 0, x3) | "
               "(conj x1, b conj x2, 0)(x)(x1, x2, 0), b = " +
               [this] {
                   std::ostringstream os;
                   os << b_;
                   return os.str();
               }();
    case BoundaryTag::E1: return "x (x) conj(x)";
    case BoundaryTag::F: return "x (x) y with x1 y1 = x2 y2 = x3 y3 (v_1 .. v_7)";
    default: return "no closed form";
    }
}

ProductVector QFamily::member(int branch, const CVec3& params) const
{
    if (branch < 1 || branch > branch_count()) throw Error(ErrorKind::OutOfRange, "branch index out of range");
    const auto& x = params;
    switch (element_) {
    case BoundaryTag::V1: {
        const double m = std::abs(x[0]);
        for (const auto& xi : x)
            if (std::abs(std::abs(xi) - m) > 1e-12 * std::max(1.0, m))
                throw Error(ErrorKind::NotInQ, "Q[A[v1]] needs |x1| = |x2| = |x3|");
        return {conj(x), x};
    }
    case BoundaryTag::Vb:
    case BoundaryTag::EHatB: {
        const double b = b_;
        switch (branch) {
        case 1: return {{0.0, std::conj(x[1]), b * std::conj(x[2])}, {0.0, x[1], x[2]}};
        case 2: return {{b * std::conj(x[0]), 0.0, std::conj(x[2])}, {x[0], 0.0, x[2]}};
        default: return {{std::conj(x[0]), b * std::conj(x[1]), 0.0}, {x[0], x[1], 0.0}};
        }
    }
    case BoundaryTag::E1: return z_tilde(x);
    case BoundaryTag::F: return v_vec(branch, x[0], x[1]);
    default: throw Error(ErrorKind::UnsupportedElement, "no closed-form Q family for this element");
    }
}

ProductVector QFamily::sample(std::mt19937_64& rng) const
{
    std::uniform_int_distribution<int> pick(1, branch_count());
    return sample(rng, pick(rng));
}

ProductVector QFamily::sample(std::mt19937_64& rng, int branch) const
{
    std::normal_distribution<double> gauss;
    CVec3 x;
    if (element_ == BoundaryTag::V1) {
        std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
        std::uniform_real_distribution<double> radius(0.5, 2.0);
        const double r = radius(rng);
        for (auto& xi : x) xi = std::polar(r, angle(rng));
    } else {
        for (auto& xi : x) xi = {gauss(rng), gauss(rng)};
    }
    return member(branch, x);
}

QFamily q_family(const BoundaryElement& element)
{
    switch (element.tag) {
    case BoundaryTag::V1:
    case BoundaryTag::E1:
    case BoundaryTag::F: return {element.tag, 1.0};
    case BoundaryTag::Vb:
    case BoundaryTag::EHatB:
        if (!element.b || !(*element.b > 0.0)) throw Error(ErrorKind::OutOfRange, "family needs b > 0");
        return {element.tag, *element.b};
    default: throw Error(ErrorKind::UnsupportedElement, "no closed-form Q family for " + std::string(to_string(element.tag)));
    }
}

bool q_f_test(const ProductVector& z, double tol)
{
    const double scale = std::sqrt(norm_squared(z.x) * norm_squared(z.y));
    std::array<Complex, 3> prod;
    for (std::size_t k = 0; k < 3; ++k) prod[k] = z.x[k] * z.y[k];
    for (std::size_t k = 0; k < 3; ++k)
        if (std::abs(prod[k] - prod[(k + 1) % 3]) > tol * scale) return false;
    return true;
}

bool dual_face_membership(const ProductVector& z, const MapParams& mp, double tol)
{
    if (!is_positive_map(mp)) throw Error(ErrorKind::NotPositiveMap, "dual faces need a positive map");
    const double scale = z.norm_squared() * std::max(1.0, mp.alpha + mp.beta + mp.gamma);
    return std::abs(pairing_product(z, mp)) <= tol * scale;
}

namespace {

void move_aligned_to_front(Decomposition& d, const ProductVector& z)
{
    const CVector target = z.embed();
    std::vector<Term> terms(d.terms().begin(), d.terms().end());
    auto it = std::min_element(terms.begin(), terms.end(), [&](const Term& l, const Term& r) {
        return misalignment(l.vector.embed(), target) < misalignment(r.vector.embed(), target);
    });
    if (it != terms.end()) std::rotate(terms.begin(), it, it + 1);
    d = Decomposition(d.target(), std::move(terms));
}

// Branch and alpha with z = scale * tilde z_branch(alpha); nullopt alpha for axis vectors.
std::pair<int, std::optional<Complex>> e_hat_b_coordinates(const ProductVector& z)
{
    const auto& y = z.y;
    const double ny = std::sqrt(norm_squared(y));
    const double tol = 1e-12 * ny;
    // The zero coordinate of y selects the branch.
    int zero = 0;
    for (int k = 1; k < 3; ++k)
        if (std::abs(y[k]) < std::abs(y[zero])) zero = k;
    const int branch = zero + 1;
    // tilde z_1: y = (0,1,alpha); tilde z_2: y = (alpha,0,1); tilde z_3: y = (1,alpha,0)
    static constexpr std::array<std::array<int, 2>, 3> lead_follow{{{1, 2}, {2, 0}, {0, 1}}};
    const auto [lead, follow] = lead_follow[zero];
    if (std::abs(y[lead]) <= tol) return {branch, std::nullopt};
    const Complex alpha = y[follow] / y[lead];
    if (std::abs(alpha) <= 1e-12) return {branch, std::nullopt};
    return {branch, alpha};
}

} // namespace

Decomposition decompose_through(const StateParams& p, const ProductVector& z)
{
    if (z.is_zero()) throw Error(ErrorKind::DegenerateVector, "zero product vector");
    const BoundaryElement el = boundary_element(p);
    switch (el.tag) {
    case BoundaryTag::V1: {
        const auto& y = z.y;
        if (std::abs(y[0]) == 0.0) throw Error(ErrorKind::NotInQ, "vector is not in Q[A[v1]]");
        Complex alpha = y[1] / y[0], beta = y[2] / y[0];
        alpha /= std::abs(alpha);
        beta /= std::abs(beta);
        return decompose_through_v1(alpha, beta);
    }
    case BoundaryTag::E1: return decompose_through_e1(p.a, z.x);
    case BoundaryTag::EHatB: {
        const auto [branch, alpha] = e_hat_b_coordinates(z);
        if (alpha) return decompose_through_e_hat_b(p.a, p.b, *alpha, branch);
        Decomposition d = decompose_e_hat_b(p.a, p.b);
        move_aligned_to_front(d, z);
        return d;
    }
    case BoundaryTag::F: return decompose_through_f(p.b, p.c, z);
    default:
        throw Error(ErrorKind::UnsupportedElement,
                    "no decomposition through a prescribed vector for " + std::string(to_string(el.tag)));
    }
}

std::string_view to_string(TheoremIvStatus s)
{
    switch (s) {
    case TheoremIvStatus::Holds: return "PASS";
    case TheoremIvStatus::Fails: return "FAIL";
    case TheoremIvStatus::NotApplicable: return "n/a";
    }
    return "unknown";
}

TheoremIvReport theorem_iv_check(const StateParams& p, int samples, double tol, std::uint64_t seed)
{
    TheoremIvReport report;
    const BoundaryElement el = boundary_element(p);
    report.element = el.tag;
    std::mt19937_64 rng(seed);

    if (el.tag == BoundaryTag::Vb) {
        // Q[A[v_b]] is larger than the set of vectors through which A[v_b]
        // decomposes: only members in the dual face of Phi(1/b) qualify.
        const double b = *el.b;
        const QFamily family = q_family(el);
        const MapParams phi = phi_t(1.0 / b);
        for (int k = 0; k < samples; ++k)
            if (dual_face_membership(family.sample(rng), phi)) ++report.dual_face_members;

        std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
        for (int k = 0; k < samples; ++k) {
            const Complex alpha = std::polar(1.0 / std::sqrt(b), angle(rng));
            const Decomposition d = decompose_through_vb(b, alpha);
            const ProductVector z = z_tilde_vec(1 + k % 3, alpha, b);
            double best = 1.0;
            for (const auto& t : d.terms()) best = std::min(best, misalignment(t.vector.embed(), z.embed()));
            ++report.restricted_samples;
            if (best <= tol && d.residual() <= tol && dual_face_membership(z, phi)) ++report.restricted_passed;
        }
        report.samples = samples;
        report.status = TheoremIvStatus::Fails;
        report.note = "A[v_b] lies on the boundary of the face it spans in the PPT cone; only Q-members in the "
                      "dual face of Phi(1/b) admit a decomposition through themselves";
        return report;
    }

    std::optional<QFamily> family;
    try {
        family = q_family(el);
    } catch (const Error&) {
        report.note = "no closed-form Q family for this element";
        return report;
    }

    const FacePair face = face_of(build_state(p));
    report.samples = samples;
    for (int k = 0; k < samples; ++k) {
        const ProductVector z = family->sample(rng);
        bool ok = q_membership(z, face);
        try {
            const Decomposition d = decompose_through(p, z);
            const double res = d.residual();
            const double mis = misalignment(d.terms().front().vector.embed(), z.embed());
            report.max_residual = std::max(report.max_residual, res);
            report.max_misalignment = std::max(report.max_misalignment, mis);
            const bool positive = d.all_weights_positive();
            report.all_weights_positive = report.all_weights_positive && positive;
            ok = ok && positive && res <= tol && mis <= tol;
        } catch (const Error&) {
            ok = false;
        }
        if (ok) ++report.passed;
    }
    report.status = report.passed == samples ? TheoremIvStatus::Holds : TheoremIvStatus::Fails;
    return report;
}

KernelFixtures kernel_fixtures(BoundaryTag element, std::optional<double> b)
{
    auto vec = [](std::initializer_list<double> v) { return CVector(v.begin(), v.end()); };
    switch (element) {
    case BoundaryTag::V1:
        return {{vec({1, 0, 0, 0, -1, 0, 0, 0, 0}), vec({0, 0, 0, 0, 1, 0, 0, 0, -1})},
                {vec({0, 1, 0, -1, 0, 0, 0, 0, 0}), vec({0, 0, 0, 0, 0, 1, 0, -1, 0}),
                 vec({0, 0, -1, 0, 0, 0, 1, 0, 0})}};
    case BoundaryTag::Vb: {
        if (!b || !(*b > 0.0)) throw Error(ErrorKind::OutOfRange, "v_b fixtures need b > 0");
        const double v = *b;
        return {{},
                {vec({0, v, 0, -1, 0, 0, 0, 0, 0}), vec({0, 0, 0, 0, 0, v, 0, -1, 0}),
                 vec({0, 0, -1, 0, 0, 0, v, 0, 0})}};
    }
    default: throw Error(ErrorKind::UnsupportedElement, "kernel fixtures exist for v1 and v_b only");
    }
}

double projector_distance(const CMatrix& p, const CMatrix& q) { return (p - q).frobenius_norm(); }

} // namespace choi
