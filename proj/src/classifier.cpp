#include "choi/classifier.hpp"

#include "choi/error.hpp"

#include <cmath>

namespace choi {

std::string_view to_string(Verdict v)
{
    switch (v) {
    case Verdict::NotState: return "NotState";
    case Verdict::NPT: return "NPT";
    case Verdict::PPTES: return "PPTES";
    case Verdict::SeparableBoundaryOfC: return "SeparableBoundaryOfC";
    case Verdict::SeparableInteriorOfC: return "SeparableInteriorOfC";
    }
    return "Unknown";
}

std::string_view to_string(BoundaryTag tag)
{
    switch (tag) {
    case BoundaryTag::V1: return "v1";
    case BoundaryTag::Vb: return "v_b";
    case BoundaryTag::E1: return "e1";
    case BoundaryTag::EbEdge: return "e_b";
    case BoundaryTag::EHatB: return "e^b";
    case BoundaryTag::E0: return "e0";
    case BoundaryTag::EInf: return "e_inf";
    case BoundaryTag::F: return "f";
    case BoundaryTag::Interior: return "interior";
    case BoundaryTag::Exterior: return "exterior";
    }
    return "unknown";
}

namespace {

// Left and right sides of the second separability inequality.
double sep_lhs(const StateParams& p) { return (p.b + p.a - 2.0) * (p.c + p.a - 2.0); }
double sep_rhs(const StateParams& p) { return (1.0 - p.a) * (1.0 - p.a); }

bool sep_holds(const StateParams& p, double tol)
{
    return p.a + p.b - 2.0 >= -tol && sep_lhs(p) >= sep_rhs(p) - tol;
}

bool near(double x, double y, double tol) { return std::abs(x - y) <= tol; }

} // namespace

bool is_ppt_params(const StateParams& p, double tol)
{
    return p.a >= 1.0 - tol && p.b >= -tol && p.c >= -tol && p.b * p.c >= 1.0 - tol;
}

bool is_separable_params(const StateParams& p, double tol) { return is_ppt_params(p, tol) && sep_holds(p, tol); }

bool is_pptes_params(const StateParams& p, double tol)
{
    return p.a >= 1.0 - tol && p.a < 2.0 - tol && p.b >= -tol && p.c >= -tol && p.b * p.c >= 1.0 - tol &&
           sep_lhs(p) < sep_rhs(p) - tol;
}

Classification classify(const StateParams& p, double tol)
{
    Classification out{Verdict::NotState, tol};
    if (p.a < 1.0 - tol || p.b < -tol || p.c < -tol) return out;
    if (!is_ppt_params(p, tol)) {
        out.verdict = Verdict::NPT;
        return out;
    }
    if (!sep_holds(p, tol)) {
        out.verdict = Verdict::PPTES;
        return out;
    }
    const bool strict = p.a > 1.0 + tol && p.b * p.c > 1.0 + tol && p.a + p.b - 2.0 > tol &&
                        sep_lhs(p) > sep_rhs(p) + tol;
    out.verdict = strict ? Verdict::SeparableInteriorOfC : Verdict::SeparableBoundaryOfC;
    return out;
}

BoundaryElement boundary_element(const StateParams& p, double tol)
{
    if (!is_separable_params(p, tol)) return {BoundaryTag::Exterior, {}, {}};

    const bool a_is_1 = near(p.a, 1.0, tol);
    const bool b_is_1 = near(p.b, 1.0, tol);
    const bool c_is_1 = near(p.c, 1.0, tol);
    const bool on_bc_1 = near(p.b * p.c, 1.0, tol);

    if (a_is_1 && b_is_1 && c_is_1) return {BoundaryTag::V1, {}, {}};
    if (near(p.a, 2.0, tol) && on_bc_1 && !b_is_1) return {BoundaryTag::Vb, p.b, {}};

    if (b_is_1 && c_is_1) return {BoundaryTag::E1, {}, {}};
    if (p.a > 2.0 && on_bc_1) return {BoundaryTag::EHatB, p.b, {}};
    if (p.a > 1.0 + tol && p.a < 2.0 - tol && near(sep_lhs(p), sep_rhs(p), tol)) {
        const VertexExtension ext = extend_to_vertex(p);
        return {BoundaryTag::EbEdge, ext.vertex.b, ext.weight};
    }
    if (a_is_1 && b_is_1) return {BoundaryTag::E0, {}, {}};
    if (a_is_1 && c_is_1) return {BoundaryTag::EInf, {}, {}};
    if (a_is_1) return {BoundaryTag::F, {}, {}};
    return {BoundaryTag::Interior, {}, {}};
}

VertexExtension extend_to_vertex(const StateParams& p)
{
    if (!(p.a > 1.0 && p.a < 2.0)) throw Error(ErrorKind::OutOfRange, "vertex extension needs 1 < a < 2");
    const double s = p.a - 1.0;
    return {{2.0, (p.b - 1.0) / s + 1.0, (p.c - 1.0) / s + 1.0}, s};
}

} // namespace choi
