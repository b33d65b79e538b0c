#include "choi/states.hpp"

#include "choi/error.hpp"

#include <cmath>

namespace choi {

CMatrix build_state(const StateParams& p)
{
    for (double v : {p.a, p.b, p.c})
        if (!std::isfinite(v) || v < 0.0)
            throw Error(ErrorKind::InvalidParams, "state parameters must be finite and nonnegative");

    CMatrix m(9);
    for (std::size_t k : kASlots) m(k, k) = p.a;
    for (std::size_t k : kBSlots) m(k, k) = p.b;
    for (std::size_t k : kCSlots) m(k, k) = p.c;
    for (std::size_t i : kASlots)
        for (std::size_t j : kASlots)
            if (i != j) m(i, j) = 1.0;
    return m;
}

CMatrix partial_transpose(const CMatrix& m, BipartiteDims dims)
{
    if (dims.m * dims.n != m.dim())
        throw Error(ErrorKind::DimensionMismatch, "m*n does not match the matrix dimension");
    const std::size_t n = dims.n;
    CMatrix out(m.dim());
    for (std::size_t i = 0; i < dims.m; ++i)
        for (std::size_t j = 0; j < dims.m; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) out(i * n + k, j * n + l) = m(j * n + k, i * n + l);
    return out;
}

CMatrix trace_normalized(const CMatrix& m)
{
    const Complex tr = m.trace();
    if (std::abs(tr) == 0.0) throw Error(ErrorKind::InvalidParams, "cannot normalize a traceless matrix");
    return m * (1.0 / tr);
}

StateType state_type(const StateParams& p, double tol)
{
    const CMatrix a = build_state(p);
    const EigDecomp eig = hermitian_eig(a);
    const EigDecomp eig_pt = hermitian_eig(partial_transpose(a));
    if (!is_psd(eig, tol) || !is_psd(eig_pt, tol))
        throw Error(ErrorKind::NotPPT, "A[a,b,c] or its partial transpose has a negative eigenvalue");
    return {rank_of(eig, tol), rank_of(eig_pt, tol)};
}

} // namespace choi
