#pragma once

#include "choi/linalg.hpp"

#include <array>

namespace choi {

using CVec3 = std::array<Complex, 3>;

/// x (x) y in C^3 (x) C^3, embedded lexicographically: index 3*i + j holds x_i y_j.
struct ProductVector {
    CVec3 x{};
    CVec3 y{};

    CVector embed() const;
    /// conj(x) (x) y
    ProductVector partial_conjugate() const;
    /// ||x||^2 ||y||^2
    double norm_squared() const;
    bool is_zero() const;
};

ProductVector operator*(Complex scale, const ProductVector& z);

CVec3 conj(const CVec3& v);
double norm_squared(const CVec3& v);

/// 1 - |<u,v>|^2 / (|u|^2 |v|^2); zero exactly when u and v are parallel.
double misalignment(std::span<const Complex> u, std::span<const Complex> v);

} // namespace choi
