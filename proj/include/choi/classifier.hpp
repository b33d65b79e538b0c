#pragma once

#include "choi/states.hpp"

#include <optional>
#include <string_view>

namespace choi {

/// Band around every defining surface; points inside it count as boundary cases.
inline constexpr double kClassificationTol = 1e-9;

enum class Verdict {
    NotState,
    NPT,
    PPTES,
    SeparableBoundaryOfC,
    SeparableInteriorOfC,
};

std::string_view to_string(Verdict v);

struct Classification {
    Verdict verdict = Verdict::NotState;
    double tolerance_used = kClassificationTol;

    bool is_separable() const
    {
        return verdict == Verdict::SeparableBoundaryOfC || verdict == Verdict::SeparableInteriorOfC;
    }
    bool is_ppt() const { return verdict == Verdict::PPTES || is_separable(); }
};

/// Position of a separable (a,b,c) in the convex body C. Edge tags also cover
/// the edge interiors.
enum class BoundaryTag {
    V1,       // (1,1,1)
    Vb,       // (2, b, 1/b), b != 1
    E1,       // {(a,1,1) : a >= 1}
    EbEdge,   // open segment from v1 to v_b
    EHatB,    // {(a,b,1/b) : a > 2}
    E0,       // {(1,1,c) : c > 1}
    EInf,     // {(1,b,1) : b > 1}
    F,        // {(1,b,c) : b, c > 1}
    Interior,
    Exterior,
};

std::string_view to_string(BoundaryTag tag);

struct BoundaryElement {
    BoundaryTag tag = BoundaryTag::Exterior;
    std::optional<double> b; // v_b, e_b, e^b
    std::optional<double> s; // position along e_b: p = (1-s) v1 + s v_b
};

bool is_ppt_params(const StateParams& p, double tol = kClassificationTol);
bool is_separable_params(const StateParams& p, double tol = kClassificationTol);
bool is_pptes_params(const StateParams& p, double tol = kClassificationTol);

Classification classify(const StateParams& p, double tol = kClassificationTol);

/// Precedence when tolerance bands overlap: v1 > v_b > edges > f > interior.
BoundaryElement boundary_element(const StateParams& p, double tol = kClassificationTol);

struct VertexExtension {
    StateParams vertex; // on the plane a = 2
    double weight = 0.0; // p = (1 - weight) * (1,1,1) + weight * vertex
};

/// Extends the segment from (1,1,1) through p (1 < a < 2) to the plane a = 2.
/// Throws OutOfRange otherwise.
VertexExtension extend_to_vertex(const StateParams& p);

} // namespace choi
