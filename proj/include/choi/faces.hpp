#pragma once

#include "choi/classifier.hpp"
#include "choi/decomposer.hpp"
#include "choi/linalg.hpp"
#include "choi/maps.hpp"
#include "choi/product_vector.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace choi {

/// Range projectors of A and A^Gamma; they determine the smallest face of
/// the PPT cone containing A.
struct FacePair {
    CMatrix d; // onto R(A)
    CMatrix e; // onto R(A^Gamma)
    std::size_t rank_d = 0;
    std::size_t rank_e = 0;
};

/// Throws NotPPT if A or A^Gamma has an eigenvalue below -tol.
FacePair face_of(const CMatrix& a, double tol = kDefaultRankTol);

inline constexpr double kQMembershipTol = 1e-8;

/// x (x) y in R(A) and conj(x) (x) y in R(A^Gamma), each up to a relative residual of tol.
bool q_membership(const ProductVector& z, const FacePair& face, double tol = kQMembershipTol);
bool q_membership(const ProductVector& z, const CMatrix& a, double tol = kQMembershipTol);

/// Closed-form parameterization of Q[A] for v1, v_b / e^b, e1 and f.
class QFamily {
public:
    QFamily(BoundaryTag element, double b);

    BoundaryTag element() const noexcept { return element_; }
    double b() const noexcept { return b_; }
    int branch_count() const;
    std::string description() const;

    /// v1: x with |x1| = |x2| = |x3| gives conj(x) (x) x.
    /// v_b / e^b: branch 1..3 uses the two coordinates of x not zeroed by the branch.
    /// e1: x (x) conj(x).
    /// f: branch 1..7 gives v_branch(params[0], params[1]).
    ProductVector member(int branch, const CVec3& params) const;

    /// Random member with standard normal complex parameters.
    ProductVector sample(std::mt19937_64& rng) const;
    ProductVector sample(std::mt19937_64& rng, int branch) const;

private:
    BoundaryTag element_;
    double b_;
};

/// Throws UnsupportedElement for e_b, e0, e_inf, interior and exterior.
QFamily q_family(const BoundaryElement& element);

/// x1 y1 = x2 y2 = x3 y3 up to tol * ||x|| ||y||.
bool q_f_test(const ProductVector& z, double tol = 1e-12);

/// <zz*, phi> = 0 up to tol * ||z||^2 * max(1, alpha+beta+gamma). Throws NotPositiveMap.
bool dual_face_membership(const ProductVector& z, const MapParams& mp, double tol = 1e-10);

/// Decomposition of A[p] whose first term is parallel to z, for p on v1, e1, e^b
/// or f and z in the matching Q-family.
Decomposition decompose_through(const StateParams& p, const ProductVector& z);

enum class TheoremIvStatus { Holds, Fails, NotApplicable };

std::string_view to_string(TheoremIvStatus s);

struct TheoremIvReport {
    BoundaryTag element = BoundaryTag::Exterior;
    TheoremIvStatus status = TheoremIvStatus::NotApplicable;
    int samples = 0;
    int passed = 0;
    double max_residual = 0.0;
    double max_misalignment = 0.0;
    bool all_weights_positive = true;
    // v_b only: random members of Q[A[v_b]] lying in the dual face of Phi(1/b),
    // and how many members of the restricted family decompose through themselves.
    int dual_face_members = 0;
    int restricted_samples = 0;
    int restricted_passed = 0;
    std::string note;
};

/// Samples members z of Q[A] and decomposes A through each of them.
TheoremIvReport theorem_iv_check(const StateParams& p, int samples, double tol = kDecompositionTol,
                                 std::uint64_t seed = 20120901);

struct KernelFixtures {
    std::vector<CVector> kernel_a;
    std::vector<CVector> kernel_a_gamma;
};

/// Literal spanning vectors of ker A and ker A^Gamma at v1 and v_b.
KernelFixtures kernel_fixtures(BoundaryTag element, std::optional<double> b = {});

double projector_distance(const CMatrix& p, const CMatrix& q);

} // namespace choi
