#pragma once

#include "choi/linalg.hpp"

#include <array>
#include <cstddef>

namespace choi {

/// Parameters of the 3x3 family A[a,b,c].
struct StateParams {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
};

struct BipartiteDims {
    std::size_t m = 3;
    std::size_t n = 3;
};

/// Slots of the lexicographic basis e_i (x) e_j (0-based index 3i+j) that
/// carry the a, b and c diagonal entries.
inline constexpr std::array<std::size_t, 3> kASlots{0, 4, 8};
inline constexpr std::array<std::size_t, 3> kBSlots{2, 3, 7};
inline constexpr std::array<std::size_t, 3> kCSlots{1, 5, 6};

/// Diagonal (a,c,b,b,a,c,c,b,a) plus 1 linking every pair of e_i (x) e_i.
/// Throws InvalidParams for negative or non-finite parameters.
CMatrix build_state(const StateParams& p);

/// Block (i,j) of the output is block (j,i) of the input.
CMatrix partial_transpose(const CMatrix& m, BipartiteDims dims = {});

/// Divides by the trace. States are otherwise kept unnormalized.
CMatrix trace_normalized(const CMatrix& m);

struct StateType {
    std::size_t p = 0; // rank A
    std::size_t q = 0; // rank A^Gamma

    friend bool operator==(const StateType&, const StateType&) = default;
};

/// (rank A, rank A^Gamma) from the eigenvalue oracle. Throws NotPPT.
StateType state_type(const StateParams& p, double tol = kDefaultRankTol);

} // namespace choi
