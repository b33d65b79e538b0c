#pragma once

#include "choi/linalg.hpp"
#include "choi/product_vector.hpp"
#include "choi/states.hpp"

#include <vector>

namespace choi {

/// Generalized Choi map Phi[alpha, beta, gamma] on M_3.
struct MapParams {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
};

/// Diagonal mixes (x11, x22, x33) with weights rotated cyclically through
/// (alpha, beta, gamma); off-diagonal entries are negated.
CMatrix apply_map(const MapParams& mp, const CMatrix& x);

/// C = sum_ij e_ij (x) Phi(e_ij).
CMatrix choi_matrix(const MapParams& mp);

/// The one-parameter family Phi(t), t > 0, on the boundary alpha+beta+gamma = 2,
/// beta*gamma = (1-alpha)^2.
MapParams phi_t(double t);

/// alpha+beta+gamma >= 2 and (alpha > 1 or beta*gamma >= (1-alpha)^2).
/// `tol` absorbs rounding on the boundary of the positive cone.
bool is_positive_map(const MapParams& mp, double tol = 1e-12);

/// <A, Phi> = Tr(C_Phi A^t).
double pairing(const CMatrix& a, const MapParams& mp);

/// <zz*, Phi> evaluated as the quadratic form (Phi(xx*) conj(y) | conj(y)).
double pairing_product(const ProductVector& z, const MapParams& mp);

/// 3(a alpha + b beta + c gamma - 2).
double pairing_closed_form(const StateParams& p, const MapParams& mp);

struct WitnessPoint {
    double t = 0.0;
    double value = 0.0;
};

/// Infimum of t -> <A[p], Phi(t)> over t in (0, inf). The minimizer may sit at
/// t = 0 or t = inf when no interior critical point improves on the limits.
WitnessPoint analytic_witness_minimum(const StateParams& p);

/// Positive roots of (a+b-2)t^2 + 2(1-a)t + (a+c-2), i.e. where the pairing
/// with Phi(t) changes sign.
std::vector<double> witness_zero_crossings(const StateParams& p);

struct WitnessScan {
    double t_best = 0.0;
    double value = 0.0;
    std::vector<double> zero_crossings;
    WitnessPoint analytic;
};

/// Minimizes <A[p], Phi(t)> over a log-spaced grid on [t_min, t_max].
WitnessScan witness_scan(const StateParams& p, int grid = 1001, double t_min = 1e-3, double t_max = 1e3);

} // namespace choi
