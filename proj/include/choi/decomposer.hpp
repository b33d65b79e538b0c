#pragma once

#include "choi/linalg.hpp"
#include "choi/product_vector.hpp"
#include "choi/states.hpp"

#include <array>
#include <span>
#include <utility>
#include <vector>

namespace choi {

struct Term {
    double weight = 0.0;
    ProductVector vector;
};

/// A positive combination sum_k w_k z_k z_k^* of product vectors meant to equal
/// A[target]. Construction does not check the identity; `residual()` does.
class Decomposition {
public:
    Decomposition() = default;
    Decomposition(StateParams target, std::vector<Term> terms);

    const StateParams& target() const noexcept { return target_; }
    std::span<const Term> terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }

    CMatrix reconstruct() const;
    /// sum_k w_k (conj(x_k) (x) y_k)(...)^*, which must equal A[target]^Gamma.
    CMatrix reconstruct_partial_conjugate() const;

    /// ||reconstruct() - A[target]||_F / ||A[target]||_F
    double residual() const;
    double partial_conjugate_residual() const;

    double total_weight() const;
    bool all_weights_positive() const;

    /// Appends every term of `other` with its weight multiplied by `scale`.
    /// Terms whose scaled weight is not positive are dropped.
    void append_scaled(const Decomposition& other, double scale);
    void append(Term term);

private:
    StateParams target_;
    std::vector<Term> terms_;
};

inline constexpr double kDecompositionTol = 1e-10;

/// 1, e^{2 pi i/3}, e^{-2 pi i/3}
std::array<Complex, 3> omega_roots();

/// The three product vectors building A[2, b, 1/b] (i = 1, 2, 3); |omega| = 1.
ProductVector z_vec(int i, Complex omega, double b);

/// (1, conj(omega), conj(eta)) (x) (1, omega, eta)
ProductVector z4(Complex omega, Complex eta);

/// A[1,1,1] = 1/9 sum over Omega x Omega of z4 z4^*.
Decomposition decompose_v1();

/// A[2,b,1/b] = 1/(3b) sum_i sum_omega z_i(omega) z_i(omega)^*.
Decomposition decompose_vb(double b);

/// Same identity with phases shifted so the first term is
/// (1, conj(alpha), conj(beta)) (x) (1, alpha, beta). |alpha| = |beta| = 1.
Decomposition decompose_through_v1(Complex alpha, Complex beta);

/// Phase-shifted A[2,b,1/b] identity whose first terms are z_i(sqrt(b) conj(alpha)),
/// i = 1,2,3. Requires b |alpha|^2 = 1 (ConstraintViolated otherwise).
Decomposition decompose_through_vb(double b, Complex alpha);

/// b |alpha|^2 + 1 / (b |alpha|^2); never below 2.
double a_of_alpha(double b, Complex alpha);

/// tilde z_i(alpha): (0,1,b conj a)(x)(0,1,a), (b conj a,0,1)(x)(a,0,1), (1,b conj a,0)(x)(1,a,0).
ProductVector z_tilde_vec(int i, Complex alpha, double b);

/// A[a,b,1/b] = A[2,b,1/b] + (a-2) sum_i tilde z_i(0) tilde z_i(0)^*, a >= 2.
Decomposition decompose_e_hat_b(double a, double b);

/// Decomposition of A[a,b,1/b] whose first term is tilde z_branch(alpha).
/// Interpolates with a second family when a(alpha) != a. Throws OutOfRange when
/// no positive interpolation exists (a = 2 and a(alpha) > 2).
Decomposition decompose_through_e_hat_b(double a, double b, Complex alpha, int branch = 1);

struct KValues {
    double k = 0.0;
    double a_val = 0.0;
};

/// k(x) = sum_{i<j} |x_i|^2 |x_j|^2, a(x) = sum |x_i|^4 / k(x). Throws DegenerateVector if k = 0.
KValues k_and_a(const CVec3& x);

/// x (x) conj(x)
ProductVector z_tilde(const CVec3& x);

/// A[a,1,1] = A[1,1,1] + (a-1) sum_i tilde z(e_i) tilde z(e_i)^*, a >= 1.
Decomposition decompose_e1(double a);

/// Decomposition of A[a,1,1] whose first term is x (x) conj(x).
Decomposition decompose_through_e1(double a, const CVec3& x);

/// Seven (s, t) pairs for the product vectors v_1..v_7 spanning Q[A[1,b,c]].
struct SevenTuple {
    std::array<std::pair<Complex, Complex>, 7> pairs{};
    double b_v = 0.0; // common value of the second chain
    double c_v = 0.0; // common value of the first chain

    /// The three sums of each chain, recomputed from `pairs`.
    std::array<double, 3> c_chain() const;
    std::array<double, 3> b_chain() const;
};

/// v_i(s,t) for i = 1..7 (v_7(s,t) = (1,s,t) (x) (1,1/s,1/t)).
ProductVector v_vec(int i, Complex s, Complex t);

/// Completes (s,t) at slot i into a seven-tuple satisfying both chains.
/// Throws DegeneratePair for (0,0) or, when i = 7, a zero component.
SevenTuple seven_tuple_complete(int i, Complex s, Complex t);

/// 1/9 sum_i sum_{Omega x Omega} v_i(w s_i, e t_i) v_i(...)^* = A[1, b_V, c_V].
/// Terms of slot `first` come first.
Decomposition seven_tuple_decomposition(const SevenTuple& tuple, int first = 7);

/// A[1,b,c] for b, c >= 1.
Decomposition decompose_f(double b, double c);

/// Decomposition of A[1,b,c] whose first term is z; z must satisfy
/// x1 y1 = x2 y2 = x3 y3 (NotInQ otherwise).
Decomposition decompose_through_f(double b, double c, const ProductVector& z);

/// Unit product vectors e_i (x) e_j on the b-slots and c-slots.
std::array<ProductVector, 3> b_slot_units();
std::array<ProductVector, 3> c_slot_units();

/// Any separable A[a,b,c]. Throws NotSeparable.
Decomposition decompose_general(const StateParams& p, double tol = 1e-9);

} // namespace choi
