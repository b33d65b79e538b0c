// Oracles and random generators shared by the unit tests and the acceptance suite.
// Nothing here calls into the library's construction code for the quantity it checks.
#pragma once

#include "choi/linalg.hpp"
#include "choi/product_vector.hpp"
#include "choi/states.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

namespace oracle {

using choi::CMatrix;
using choi::Complex;

using Layout = std::array<const char*, 9>;

// Cells: 'a','b','c' take the parameters, '1' is 1, '-' is -1, '.' is 0.
inline CMatrix from_layout(const Layout& rows, double a, double b, double c)
{
    CMatrix m(9);
    for (std::size_t i = 0; i < 9; ++i)
        for (std::size_t j = 0; j < 9; ++j) {
            switch (rows[i][j]) {
            case 'a': m(i, j) = a; break;
            case 'b': m(i, j) = b; break;
            case 'c': m(i, j) = c; break;
            case '1': m(i, j) = 1.0; break;
            case '-': m(i, j) = -1.0; break;
            default: break;
            }
        }
    return m;
}

inline constexpr Layout kStateLayout{"a...1...1", ".c.......", "..b......", "...b.....", "1...a...1",
                                     ".....c...", "......c..", ".......b.", "1...1...a"};
inline constexpr Layout kStateGammaLayout{"a........", ".c.1.....", "..b...1..", ".1.b.....", "....a....",
                                          ".....c.1.", "..1...c..", ".....1.b.", "........a"};
// alpha, beta, gamma in the a, b, c cells.
inline constexpr Layout kChoiLayout{"a...-...-", ".c.......", "..b......", "...b.....", "-...a...-",
                                    ".....c...", "......c..", ".......b.", "-...-...a"};

inline CMatrix state(double a, double b, double c) { return from_layout(kStateLayout, a, b, c); }
inline CMatrix state_gamma(double a, double b, double c) { return from_layout(kStateGammaLayout, a, b, c); }
inline CMatrix choi(double al, double be, double ga) { return from_layout(kChoiLayout, al, be, ga); }

// Closed-form smallest eigenvalues from the block structure of A and A^Gamma.
inline double min_eig_state(double a, double b, double c) { return std::min({a - 1.0, b, c}); }
inline double min_eig_gamma(double a, double b, double c)
{
    return std::min(a, 0.5 * (b + c) - std::sqrt(0.25 * (b - c) * (b - c) + 1.0));
}

// <A[a,b,c], Phi(t)> evaluated directly from the map parameters.
inline double witness(double a, double b, double c, double t)
{
    const double d = 1.0 - t + t * t;
    return 3.0 * (a * (1 - t) * (1 - t) / d + b * t * t / d + c / d - 2.0);
}

// Brute-force min over Phi(t): dense log grid plus both limits.
inline double witness_min(double a, double b, double c, int grid = 4001)
{
    double best = std::min(3.0 * (a + c - 2.0), 3.0 * (a + b - 2.0));
    for (int k = 0; k < grid; ++k) {
        const double t = std::exp(-12.0 + 24.0 * k / (grid - 1));
        best = std::min(best, witness(a, b, c, t));
    }
    return best;
}

inline CMatrix kron(const CMatrix& x, const CMatrix& y)
{
    const std::size_t m = x.dim(), n = y.dim();
    CMatrix out(m * n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) out(i * n + k, j * n + l) = x(i, j) * y(k, l);
    return out;
}

inline double max_abs_diff(const CMatrix& x, const CMatrix& y)
{
    double m = 0.0;
    for (std::size_t i = 0; i < x.dim(); ++i)
        for (std::size_t j = 0; j < x.dim(); ++j) m = std::max(m, std::abs(x(i, j) - y(i, j)));
    return m;
}

// sum_k w_k z_k z_k^* built entrywise from the stored vectors.
template <class Terms> CMatrix outer_sum(const Terms& terms)
{
    CMatrix m(9);
    for (const auto& t : terms) {
        const auto z = t.vector.embed();
        for (std::size_t i = 0; i < 9; ++i)
            for (std::size_t j = 0; j < 9; ++j) m(i, j) += t.weight * z[i] * std::conj(z[j]);
    }
    return m;
}

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }
    Complex complex() { return {normal(), normal()}; }
    double normal() { return std::normal_distribution<double>()(gen); }
    Complex phase() { return std::polar(1.0, uniform(0.0, 2.0 * M_PI)); }
    choi::CVec3 vec3() { return {complex(), complex(), complex()}; }
    choi::ProductVector product() { return {vec3(), vec3()}; }

    CMatrix hermitian(std::size_t n)
    {
        CMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = normal();
            for (std::size_t j = i + 1; j < n; ++j) {
                m(i, j) = complex();
                m(j, i) = std::conj(m(i, j));
            }
        }
        return m;
    }

    // Separable points of each regime.
    choi::StateParams interior_low_a()
    {
        // 1 < a < 2 strictly inside C.
        for (;;) {
            const double a = uniform(1.01, 1.99), b = uniform(0.05, 5.0), c = uniform(0.05, 5.0);
            if ((a + b - 2) > 0 && (a + b - 2) * (a + c - 2) > (1 - a) * (1 - a) + 1e-6) return {a, b, c};
        }
    }
    choi::StateParams high_a()
    {
        for (;;) {
            const double a = uniform(2.0, 5.0), b = uniform(0.05, 5.0), c = uniform(0.05, 5.0);
            if (b * c >= 1.0) return {a, b, c};
        }
    }
    choi::StateParams face_f() { return {1.0, uniform(1.0, 5.0), uniform(1.0, 5.0)}; }
    choi::StateParams edge()
    {
        switch (integer(0, 4)) {
        case 0: return {uniform(1.0, 5.0), 1.0, 1.0};
        case 1: {
            const double b = uniform(0.1, 8.0);
            return {uniform(2.0, 5.0), b, 1.0 / b};
        }
        case 2: {
            const double b = uniform(0.1, 8.0), s = uniform(0.01, 0.99);
            return {1.0 + s, 1.0 + s * (b - 1.0), 1.0 + s * (1.0 / b - 1.0)};
        }
        case 3: return {1.0, 1.0, uniform(1.0, 5.0)};
        default: return {1.0, uniform(1.0, 5.0), 1.0};
        }
    }
    choi::StateParams separable()
    {
        switch (integer(0, 3)) {
        case 0: return interior_low_a();
        case 1: return high_a();
        case 2: return face_f();
        default: return edge();
        }
    }
};

} // namespace oracle
