#include "choi/decomposer.hpp"

#include "choi/classifier.hpp"
#include "choi/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

namespace choi {

// ---------------------------------------------------------------------------
// Decomposition

Decomposition::Decomposition(StateParams target, std::vector<Term> terms)
    : target_(target), terms_(std::move(terms))
{
}

CMatrix Decomposition::reconstruct() const
{
    CMatrix m(9);
    for (const auto& t : terms_) m.add_outer(t.vector.embed(), t.weight);
    return m;
}

CMatrix Decomposition::reconstruct_partial_conjugate() const
{
    CMatrix m(9);
    for (const auto& t : terms_) m.add_outer(t.vector.partial_conjugate().embed(), t.weight);
    return m;
}

double Decomposition::residual() const
{
    const CMatrix a = build_state(target_);
    return (reconstruct() - a).frobenius_norm() / a.frobenius_norm();
}

double Decomposition::partial_conjugate_residual() const
{
    const CMatrix a = partial_transpose(build_state(target_));
    return (reconstruct_partial_conjugate() - a).frobenius_norm() / a.frobenius_norm();
}

double Decomposition::total_weight() const
{
    double s = 0.0;
    for (const auto& t : terms_) s += t.weight;
    return s;
}

bool Decomposition::all_weights_positive() const
{
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.weight > 0.0; });
}

void Decomposition::append_scaled(const Decomposition& other, double scale)
{
    for (const auto& t : other.terms_) {
        const double w = t.weight * scale;
        if (w > 0.0) terms_.push_back({w, t.vector});
    }
}

void Decomposition::append(Term term)
{
    if (term.weight > 0.0) terms_.push_back(std::move(term));
}

// ---------------------------------------------------------------------------
// Building blocks

namespace {

constexpr double kUnitTol = 1e-12;

void require_unit(Complex w, const char* what)
{
    if (std::abs(std::abs(w) - 1.0) > kUnitTol) throw Error(ErrorKind::OutOfRange, std::string(what) + " must have modulus 1");
}

void require_positive(double b)
{
    if (!(b > 0.0) || !std::isfinite(b)) throw Error(ErrorKind::OutOfRange, "b must be a positive real");
}

bool close(double x, double y) { return std::abs(x - y) <= 1e-12 * std::max(1.0, std::abs(y)); }

ProductVector unit_product(std::size_t i, std::size_t j)
{
    ProductVector z;
    z.x[i] = 1.0;
    z.y[j] = 1.0;
    return z;
}

// Interpolation parameter t0 > 1 so that (1 - t0) * constructed + t0 * target
// stays at or above `lower`. Below target: t0 = 2. Above: midpoint of the
// feasible interval (1, (constructed - lower) / (constructed - target)).
std::optional<double> interpolation_t0(double constructed, double target, double lower)
{
    if (constructed < target) return 2.0;
    const double upper = (constructed - lower) / (constructed - target);
    if (!(upper > 1.0 + 1e-12)) return std::nullopt;
    return 0.5 * (1.0 + upper);
}

// Terms of tilde z_i(alpha omega) for all i and omega, weight 1/(3 b |alpha|^2),
// with branch `first` leading.
std::vector<Term> e_hat_b_family(double b, Complex alpha, int first)
{
    const double w = 1.0 / (3.0 * b * std::norm(alpha));
    std::vector<Term> terms;
    for (int k = 0; k < 3; ++k) {
        const int i = (first - 1 + k) % 3 + 1;
        for (Complex omega : omega_roots()) terms.push_back({w, z_tilde_vec(i, alpha * omega, b)});
    }
    return terms;
}

// 27 terms tilde z(s1, omega s2, eta s3), (s1,s2,s3) running over cyclic shifts of x.
std::vector<Term> e1_family(const CVec3& x)
{
    const KValues kv = k_and_a(x);
    const double w = 1.0 / (9.0 * kv.k);
    const auto roots = omega_roots();
    std::vector<Term> terms;
    for (int shift = 0; shift < 3; ++shift) {
        const CVec3 s{x[shift % 3], x[(shift + 1) % 3], x[(shift + 2) % 3]};
        for (Complex omega : roots)
            for (Complex eta : roots) terms.push_back({w, z_tilde({s[0], omega * s[1], eta * s[2]})});
    }
    return terms;
}

} // namespace

std::array<Complex, 3> omega_roots()
{
    const double h = std::numbers::sqrt3 / 2.0;
    return {Complex{1.0, 0.0}, Complex{-0.5, h}, Complex{-0.5, -h}};
}

ProductVector z_vec(int i, Complex omega, double b)
{
    require_unit(omega, "omega");
    require_positive(b);
    const double r = std::sqrt(b);
    const Complex wb = std::conj(omega);
    switch (i) {
    case 1: return {{0.0, 1.0, r * omega}, {0.0, r, wb}};
    case 2: return {{r * omega, 0.0, 1.0}, {wb, 0.0, r}};
    case 3: return {{1.0, r * omega, 0.0}, {r, wb, 0.0}};
    default: throw Error(ErrorKind::OutOfRange, "z_vec index must be 1, 2 or 3");
    }
}

ProductVector z4(Complex omega, Complex eta)
{
    require_unit(omega, "omega");
    require_unit(eta, "eta");
    return {{1.0, std::conj(omega), std::conj(eta)}, {1.0, omega, eta}};
}

Decomposition decompose_v1() { return decompose_through_v1(1.0, 1.0); }

Decomposition decompose_through_v1(Complex alpha, Complex beta)
{
    require_unit(alpha, "alpha");
    require_unit(beta, "beta");
    const auto roots = omega_roots();
    std::vector<Term> terms;
    for (Complex omega : roots)
        for (Complex eta : roots) terms.push_back({1.0 / 9.0, z4(alpha * omega, beta * eta)});
    return {{1.0, 1.0, 1.0}, std::move(terms)};
}

Decomposition decompose_vb(double b)
{
    require_positive(b);
    return decompose_through_vb(b, 1.0 / std::sqrt(b));
}

Decomposition decompose_through_vb(double b, Complex alpha)
{
    require_positive(b);
    if (std::abs(b * std::norm(alpha) - 1.0) > kUnitTol)
        throw Error(ErrorKind::ConstraintViolated, "decomposition through v_b needs b |alpha|^2 = 1");
    Complex phase = std::sqrt(b) * std::conj(alpha);
    phase /= std::abs(phase);
    const double w = 1.0 / (3.0 * b);
    std::vector<Term> terms;
    for (int i = 1; i <= 3; ++i)
        for (Complex omega : omega_roots()) terms.push_back({w, z_vec(i, phase * omega, b)});
    return {{2.0, b, 1.0 / b}, std::move(terms)};
}

double a_of_alpha(double b, Complex alpha)
{
    require_positive(b);
    const double u = b * std::norm(alpha);
    if (u == 0.0) throw Error(ErrorKind::ZeroAlpha, "a(alpha) is undefined at alpha = 0");
    return u + 1.0 / u;
}

ProductVector z_tilde_vec(int i, Complex alpha, double b)
{
    const Complex ba = b * std::conj(alpha);
    switch (i) {
    case 1: return {{0.0, 1.0, ba}, {0.0, 1.0, alpha}};
    case 2: return {{ba, 0.0, 1.0}, {alpha, 0.0, 1.0}};
    case 3: return {{1.0, ba, 0.0}, {1.0, alpha, 0.0}};
    default: throw Error(ErrorKind::OutOfRange, "tilde z index must be 1, 2 or 3");
    }
}

Decomposition decompose_e_hat_b(double a, double b)
{
    require_positive(b);
    if (!(a >= 2.0 - 1e-12)) throw Error(ErrorKind::OutOfRange, "A[a,b,1/b] construction needs a >= 2");
    Decomposition out({a, b, 1.0 / b}, {});
    out.append_scaled(decompose_vb(b), 1.0);
    for (int i = 1; i <= 3; ++i) out.append({a - 2.0, z_tilde_vec(i, 0.0, b)});
    return out;
}

Decomposition decompose_through_e_hat_b(double a, double b, Complex alpha, int branch)
{
    require_positive(b);
    if (branch < 1 || branch > 3) throw Error(ErrorKind::OutOfRange, "branch must be 1, 2 or 3");
    if (!(a >= 2.0 - 1e-12)) throw Error(ErrorKind::OutOfRange, "A[a,b,1/b] construction needs a >= 2");
    const double a_alpha = a_of_alpha(b, alpha);
    const StateParams target{a, b, 1.0 / b};

    if (close(a_alpha, a)) return {target, e_hat_b_family(b, alpha, branch)};

    const auto t0 = interpolation_t0(a_alpha, a, 2.0);
    if (!t0)
        throw Error(ErrorKind::OutOfRange,
                    "no decomposition of A[2,b,1/b] through this vector: a(alpha) exceeds a = 2");
    const double goal = (1.0 - *t0) * a_alpha + *t0 * a;
    const double beta = std::sqrt((goal + std::sqrt(std::max(0.0, goal * goal - 4.0))) / (2.0 * b));

    Decomposition out(target, {});
    out.append_scaled({target, e_hat_b_family(b, alpha, branch)}, 1.0 - 1.0 / *t0);
    out.append_scaled({target, e_hat_b_family(b, beta, 1)}, 1.0 / *t0);
    return out;
}

KValues k_and_a(const CVec3& x)
{
    const double m1 = std::norm(x[0]), m2 = std::norm(x[1]), m3 = std::norm(x[2]);
    const double k = m1 * m2 + m2 * m3 + m3 * m1;
    if (k == 0.0) throw Error(ErrorKind::DegenerateVector, "k(x) vanishes: fewer than two nonzero coordinates");
    return {k, (m1 * m1 + m2 * m2 + m3 * m3) / k};
}

ProductVector z_tilde(const CVec3& x) { return {x, conj(x)}; }

Decomposition decompose_e1(double a)
{
    if (!(a >= 1.0 - 1e-12)) throw Error(ErrorKind::OutOfRange, "A[a,1,1] construction needs a >= 1");
    Decomposition out({a, 1.0, 1.0}, {});
    out.append_scaled(decompose_v1(), 1.0);
    for (std::size_t i = 0; i < 3; ++i) out.append({a - 1.0, unit_product(i, i)});
    return out;
}

Decomposition decompose_through_e1(double a, const CVec3& x)
{
    if (!(a >= 1.0 - 1e-12)) throw Error(ErrorKind::OutOfRange, "A[a,1,1] construction needs a >= 1");
    const StateParams target{a, 1.0, 1.0};
    const double scale = std::sqrt(norm_squared(x));
    if (scale == 0.0) throw Error(ErrorKind::DegenerateVector, "x must be nonzero");

    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < 3; ++i)
        if (std::abs(x[i]) > 1e-12 * scale) support.push_back(i);

    if (support.size() == 1) {
        if (!(a > 1.0 + 1e-12))
            throw Error(ErrorKind::OutOfRange, "axis vectors admit no decomposition of A[1,1,1] through them");
        const std::size_t k = support.front();
        CVec3 axis{};
        axis[k] = x[k];
        Decomposition out(target, {});
        out.append({(a - 1.0) / std::pow(std::norm(x[k]), 2), z_tilde(axis)});
        for (std::size_t i = 0; i < 3; ++i)
            if (i != k) out.append({a - 1.0, unit_product(i, i)});
        out.append_scaled(decompose_v1(), 1.0);
        return out;
    }

    const double a_x = k_and_a(x).a_val;
    if (close(a_x, a)) return {target, e1_family(x)};

    const auto t0 = interpolation_t0(a_x, a, 1.0);
    if (!t0)
        throw Error(ErrorKind::OutOfRange, "no decomposition of A[1,1,1] through this vector: a(x) exceeds 1");
    const double goal = (1.0 - *t0) * a_x + *t0 * a;
    const double u = goal + std::sqrt(std::max(0.0, goal * goal + goal - 2.0));

    Decomposition out(target, {});
    out.append_scaled({target, e1_family(x)}, 1.0 - 1.0 / *t0);
    out.append_scaled({target, e1_family({std::sqrt(u), 1.0, 1.0})}, 1.0 / *t0);
    return out;
}

// ---------------------------------------------------------------------------
// Face f

ProductVector v_vec(int i, Complex s, Complex t)
{
    switch (i) {
    case 1: return {{1.0, 0.0, 0.0}, {0.0, s, t}};
    case 2: return {{0.0, 1.0, 0.0}, {s, 0.0, t}};
    case 3: return {{0.0, 0.0, 1.0}, {s, t, 0.0}};
    case 4: return {{0.0, s, t}, {1.0, 0.0, 0.0}};
    case 5: return {{s, 0.0, t}, {0.0, 1.0, 0.0}};
    case 6: return {{s, t, 0.0}, {0.0, 0.0, 1.0}};
    case 7:
        if (s == Complex{} || t == Complex{}) throw Error(ErrorKind::DegeneratePair, "v_7 needs nonzero s and t");
        return {{1.0, s, t}, {1.0, 1.0 / s, 1.0 / t}};
    default: throw Error(ErrorKind::OutOfRange, "v index must be in 1..7");
    }
}

namespace {

// |s_i|^2 or |t_i|^2 for 1-based slot i.
double sq(const SevenTuple& v, int i, bool second) { return std::norm(second ? v.pairs[i - 1].second : v.pairs[i - 1].first); }

struct Filler {
    int slot;    // 1-based v index
    bool second; // false: s, true: t
};

} // namespace

std::array<double, 3> SevenTuple::c_chain() const
{
    const double s7 = std::norm(pairs[6].first), t7 = std::norm(pairs[6].second);
    return {1.0 / s7 + sq(*this, 1, false) + sq(*this, 5, false), s7 / t7 + sq(*this, 2, true) + sq(*this, 6, true),
            t7 + sq(*this, 3, false) + sq(*this, 4, true)};
}

std::array<double, 3> SevenTuple::b_chain() const
{
    const double s7 = std::norm(pairs[6].first), t7 = std::norm(pairs[6].second);
    return {1.0 / t7 + sq(*this, 6, false) + sq(*this, 1, true), t7 / s7 + sq(*this, 3, true) + sq(*this, 5, true),
            s7 + sq(*this, 2, false) + sq(*this, 4, false)};
}

SevenTuple seven_tuple_complete(int i, Complex s, Complex t)
{
    if (i < 1 || i > 7) throw Error(ErrorKind::OutOfRange, "seven-tuple slot must be in 1..7");
    if (s == Complex{} && t == Complex{}) throw Error(ErrorKind::DegeneratePair, "(s,t) must not be (0,0)");
    if (i == 7 && (s == Complex{} || t == Complex{}))
        throw Error(ErrorKind::DegeneratePair, "slot 7 needs nonzero s and t");

    SevenTuple v;
    v.pairs[6] = {1.0, 1.0};
    v.pairs[i - 1] = {s, t};

    // One free magnitude per chain sum, taken from v_1..v_3 unless the seed
    // occupies one of them, in which case v_4..v_6 are used.
    const bool alt = i <= 3;
    const std::array<Filler, 3> c_fill = alt ? std::array<Filler, 3>{{{5, false}, {6, true}, {4, true}}}
                                             : std::array<Filler, 3>{{{1, false}, {2, true}, {3, false}}};
    const std::array<Filler, 3> b_fill = alt ? std::array<Filler, 3>{{{6, false}, {5, true}, {4, false}}}
                                             : std::array<Filler, 3>{{{1, true}, {3, true}, {2, false}}};

    auto raise = [&](const std::array<double, 3>& seeds, const std::array<Filler, 3>& fill) {
        const double top = *std::max_element(seeds.begin(), seeds.end());
        for (std::size_t k = 0; k < 3; ++k) {
            const double amp = std::sqrt(std::max(0.0, top - seeds[k]));
            auto& pair = v.pairs[fill[k].slot - 1];
            (fill[k].second ? pair.second : pair.first) = amp;
        }
        return top;
    };
    v.c_v = raise(v.c_chain(), c_fill);
    v.b_v = raise(v.b_chain(), b_fill);
    return v;
}

Decomposition seven_tuple_decomposition(const SevenTuple& tuple, int first)
{
    if (first < 1 || first > 7) throw Error(ErrorKind::OutOfRange, "seven-tuple slot must be in 1..7");
    const auto roots = omega_roots();
    std::vector<Term> terms;
    for (int k = 0; k < 7; ++k) {
        const int i = (first - 1 + k) % 7 + 1;
        const auto [s, t] = tuple.pairs[i - 1];
        if (i != 7 && (s == Complex{} || t == Complex{})) {
            // Phase averaging is trivial with a single nonzero component.
            if (s != Complex{} || t != Complex{}) terms.push_back({1.0, v_vec(i, s, t)});
            continue;
        }
        for (Complex omega : roots)
            for (Complex eta : roots) terms.push_back({1.0 / 9.0, v_vec(i, omega * s, eta * t)});
    }
    return {{1.0, tuple.b_v, tuple.c_v}, std::move(terms)};
}

std::array<ProductVector, 3> b_slot_units()
{
    return {unit_product(0, 2), unit_product(1, 0), unit_product(2, 1)};
}

std::array<ProductVector, 3> c_slot_units()
{
    return {unit_product(0, 1), unit_product(1, 2), unit_product(2, 0)};
}

namespace {

void require_face_f(double b, double c)
{
    if (!(b >= 1.0 - 1e-12) || !(c >= 1.0 - 1e-12) || !std::isfinite(b) || !std::isfinite(c))
        throw Error(ErrorKind::OutOfRange, "face f needs b >= 1 and c >= 1");
}

// A[1,b,c] = (1/t0) (A[1,1,1] + (B'-1) D_b + (C'-1) D_c) + (1 - 1/t0) A[1,b_V,c_V].
Decomposition interpolate_face_f(double b, double c, const SevenTuple& tuple, int first)
{
    const StateParams target{1.0, b, c};
    Decomposition family = seven_tuple_decomposition(tuple, first);
    if (close(tuple.b_v, b) && close(tuple.c_v, c)) return {target, std::vector<Term>(family.terms().begin(), family.terms().end())};

    std::optional<double> t0;
    bool feasible = true;
    for (auto [constructed, goal] : {std::pair{tuple.b_v, b}, std::pair{tuple.c_v, c}}) {
        if (close(constructed, goal)) continue;
        const auto t = interpolation_t0(constructed, goal, 1.0);
        if (!t) {
            feasible = false;
            break;
        }
        t0 = t0 ? std::min(*t0, *t) : *t;
    }
    if (!feasible || !t0)
        throw Error(ErrorKind::OutOfRange, "no decomposition of A[1,b,c] through this vector on the boundary of f");

    const double b_top = (1.0 - *t0) * tuple.b_v + *t0 * b;
    const double c_top = (1.0 - *t0) * tuple.c_v + *t0 * c;

    Decomposition corrected({1.0, b_top, c_top}, {});
    corrected.append_scaled(decompose_v1(), 1.0);
    for (const auto& z : b_slot_units()) corrected.append({b_top - 1.0, z});
    for (const auto& z : c_slot_units()) corrected.append({c_top - 1.0, z});

    Decomposition out(target, {});
    out.append_scaled(family, 1.0 - 1.0 / *t0);
    out.append_scaled(corrected, 1.0 / *t0);
    return out;
}

struct FaceFSlot {
    int i;
    Complex s;
    Complex t;
};

// Writes z as lambda * v_i(s,t).
FaceFSlot locate_in_face_f(const ProductVector& z)
{
    const double nx = std::sqrt(norm_squared(z.x));
    const double ny = std::sqrt(norm_squared(z.y));
    if (nx == 0.0 || ny == 0.0) throw Error(ErrorKind::DegenerateVector, "zero product vector");
    const double tol = 1e-12;
    std::array<Complex, 3> prod{};
    for (std::size_t k = 0; k < 3; ++k) prod[k] = z.x[k] * z.y[k];
    for (std::size_t k = 0; k < 3; ++k)
        if (std::abs(prod[k] - prod[(k + 1) % 3]) > tol * nx * ny)
            throw Error(ErrorKind::NotInQ, "product vector violates x1 y1 = x2 y2 = x3 y3");

    const Complex mean = (prod[0] + prod[1] + prod[2]) / 3.0;
    if (std::abs(mean) > tol * nx * ny) return {7, z.x[1] / z.x[0], z.x[2] / z.x[0]};

    std::vector<std::size_t> xs, ys;
    for (std::size_t k = 0; k < 3; ++k) {
        if (std::abs(z.x[k]) > tol * nx) xs.push_back(k);
        if (std::abs(z.y[k]) > tol * ny) ys.push_back(k);
    }
    static constexpr std::array<std::array<std::size_t, 2>, 3> rest{{{1, 2}, {0, 2}, {0, 1}}};
    if (xs.size() == 1) {
        const std::size_t k = xs.front();
        return {static_cast<int>(k) + 1, z.y[rest[k][0]] * z.x[k], z.y[rest[k][1]] * z.x[k]};
    }
    if (ys.size() == 1) {
        const std::size_t k = ys.front();
        return {static_cast<int>(k) + 4, z.x[rest[k][0]] * z.y[k], z.x[rest[k][1]] * z.y[k]};
    }
    throw Error(ErrorKind::NotInQ, "product vector is not of the v_1..v_7 forms");
}

} // namespace

Decomposition decompose_f(double b, double c)
{
    require_face_f(b, c);
    return interpolate_face_f(b, c, seven_tuple_complete(7, 1.0, 1.0), 7);
}

Decomposition decompose_through_f(double b, double c, const ProductVector& z)
{
    require_face_f(b, c);
    const FaceFSlot slot = locate_in_face_f(z);
    return interpolate_face_f(b, c, seven_tuple_complete(slot.i, slot.s, slot.t), slot.i);
}

// ---------------------------------------------------------------------------
// General separable point

namespace {

// A[a,b,c] with a >= 2, bc >= 1: A[a,b,1/b] plus c-slot top-up.
Decomposition decompose_plane(double a, double b, double c, double tol)
{
    Decomposition out({a, b, c}, {});
    out.append_scaled(decompose_e_hat_b(a, b), 1.0);
    const double top = c - 1.0 / b;
    if (top < -tol * std::max(1.0, c)) throw Error(ErrorKind::NotSeparable, "b c < 1 on the plane a >= 2");
    for (const auto& z : c_slot_units()) out.append({top, z});
    return out;
}

} // namespace

Decomposition decompose_general(const StateParams& p, double tol)
{
    if (!is_separable_params(p, tol)) throw Error(ErrorKind::NotSeparable, "A[a,b,c] is not separable");
    const double b = std::max(p.b, 0.0);
    const double c = std::max(p.c, 0.0);

    Decomposition out(p, {});
    if (p.a <= 1.0 + tol) {
        out.append_scaled(decompose_f(std::max(b, 1.0), std::max(c, 1.0)), 1.0);
        for (std::size_t i = 0; i < 3; ++i) out.append({p.a - 1.0, unit_product(i, i)});
    } else if (p.a < 2.0) {
        const VertexExtension ext = extend_to_vertex({p.a, b, c});
        out.append_scaled(decompose_v1(), 1.0 - ext.weight);
        out.append_scaled(decompose_plane(2.0, ext.vertex.b, ext.vertex.c, tol / (ext.weight * ext.weight)),
                          ext.weight);
    } else {
        out.append_scaled(decompose_plane(p.a, b, c, tol), 1.0);
    }
    return out;
}

} // namespace choi
