#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace choi {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

/// Dense square complex matrix, row-major.
class CMatrix {
public:
    CMatrix() = default;
    explicit CMatrix(std::size_t dim);

    static CMatrix identity(std::size_t dim);
    /// Rank-one matrix u u^*.
    static CMatrix outer(std::span<const Complex> u);
    static CMatrix diagonal(std::span<const double> diag);

    std::size_t dim() const noexcept { return dim_; }

    Complex& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
    const Complex& operator()(std::size_t row, std::size_t col) const { return data_[row * dim_ + col]; }

    std::span<const Complex> data() const noexcept { return data_; }

    CMatrix adjoint() const;
    CMatrix transpose() const;
    Complex trace() const;
    double frobenius_norm() const;
    /// Largest |M_ij - conj(M_ji)|.
    double hermitian_defect() const;

    CVector apply(std::span<const Complex> v) const;

    CMatrix& operator+=(const CMatrix& rhs);
    CMatrix& operator-=(const CMatrix& rhs);
    CMatrix& operator*=(Complex scale);

    /// Adds w * u u^* in place.
    void add_outer(std::span<const Complex> u, double w);

    friend CMatrix operator+(CMatrix lhs, const CMatrix& rhs) { return lhs += rhs; }
    friend CMatrix operator-(CMatrix lhs, const CMatrix& rhs) { return lhs -= rhs; }
    friend CMatrix operator*(CMatrix lhs, Complex scale) { return lhs *= scale; }
    friend CMatrix operator*(Complex scale, CMatrix rhs) { return rhs *= scale; }
    friend CMatrix operator*(const CMatrix& lhs, const CMatrix& rhs);

private:
    std::size_t dim_ = 0;
    std::vector<Complex> data_;
};

/// Conjugate-linear in the first argument.
Complex vdot(std::span<const Complex> u, std::span<const Complex> v);
double norm(std::span<const Complex> v);

struct EigDecomp {
    std::vector<double> eigenvalues; // ascending
    CMatrix eigenvectors;            // column k pairs with eigenvalues[k]

    CVector eigenvector(std::size_t k) const;
};

inline constexpr double kDefaultRankTol = 1e-9;
inline constexpr double kHermitianTol = 1e-10;
inline constexpr int kMaxJacobiSweeps = 50;

/// Cyclic Jacobi with two-sided unitary 2x2 rotations.
/// Throws NotHermitian / NoConvergence.
EigDecomp hermitian_eig(const CMatrix& m);

/// Eigenvalues with |lambda| <= tol * max(1, max |lambda|) count as zero.
double rank_threshold(std::span<const double> eigenvalues, double tol);

std::size_t rank_of(const EigDecomp& eig, double tol = kDefaultRankTol);
std::size_t rank_of(const CMatrix& m, double tol = kDefaultRankTol);

std::vector<CVector> kernel_basis(const EigDecomp& eig, double tol = kDefaultRankTol);
std::vector<CVector> kernel_basis(const CMatrix& m, double tol = kDefaultRankTol);

bool is_psd(const EigDecomp& eig, double tol = kDefaultRankTol);
bool is_psd(const CMatrix& m, double tol = kDefaultRankTol);

CMatrix range_projector(const EigDecomp& eig, double tol = kDefaultRankTol);
CMatrix range_projector(const CMatrix& m, double tol = kDefaultRankTol);

/// Orthogonal projector onto span(vectors); vectors need not be orthonormal.
CMatrix span_projector(std::span<const CVector> vectors, std::size_t dim, double tol = kDefaultRankTol);

} // namespace choi
