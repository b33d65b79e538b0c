#include "choi/product_vector.hpp"

#include <algorithm>

namespace choi {

CVector ProductVector::embed() const
{
    CVector v(9);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) v[3 * i + j] = x[i] * y[j];
    return v;
}

ProductVector ProductVector::partial_conjugate() const { return {choi::conj(x), y}; }

double ProductVector::norm_squared() const { return choi::norm_squared(x) * choi::norm_squared(y); }

bool ProductVector::is_zero() const { return norm_squared() == 0.0; }

ProductVector operator*(Complex scale, const ProductVector& z)
{
    ProductVector out = z;
    for (auto& xi : out.x) xi *= scale;
    return out;
}

CVec3 conj(const CVec3& v) { return {std::conj(v[0]), std::conj(v[1]), std::conj(v[2])}; }

double norm_squared(const CVec3& v) { return std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]); }

double misalignment(std::span<const Complex> u, std::span<const Complex> v)
{
    const double nu = norm(u);
    const double nv = norm(v);
    if (nu == 0.0 || nv == 0.0) return 1.0;
    const double overlap = std::abs(vdot(u, v)) / (nu * nv);
    return std::max(0.0, 1.0 - overlap * overlap);
}

} // namespace choi
