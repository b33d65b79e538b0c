#include "choi/linalg.hpp"

#include "choi/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace choi {

CMatrix::CMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, Complex{}) {}

CMatrix CMatrix::identity(std::size_t dim)
{
    CMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::outer(std::span<const Complex> u)
{
    CMatrix m(u.size());
    m.add_outer(u, 1.0);
    return m;
}

CMatrix CMatrix::diagonal(std::span<const double> diag)
{
    CMatrix m(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

CMatrix CMatrix::adjoint() const
{
    CMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

CMatrix CMatrix::transpose() const
{
    CMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

Complex CMatrix::trace() const
{
    Complex t{};
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double CMatrix::frobenius_norm() const
{
    double s = 0.0;
    for (const auto& z : data_) s += std::norm(z);
    return std::sqrt(s);
}

double CMatrix::hermitian_defect() const
{
    double worst = 0.0;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i; j < dim_; ++j)
            worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return worst;
}

CVector CMatrix::apply(std::span<const Complex> v) const
{
    if (v.size() != dim_) throw Error(ErrorKind::DimensionMismatch, "vector length does not match matrix");
    CVector out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        Complex acc{};
        for (std::size_t j = 0; j < dim_; ++j) acc += (*this)(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

CMatrix& CMatrix::operator+=(const CMatrix& rhs)
{
    if (rhs.dim_ != dim_) throw Error(ErrorKind::DimensionMismatch, "matrix sum");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
    return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& rhs)
{
    if (rhs.dim_ != dim_) throw Error(ErrorKind::DimensionMismatch, "matrix difference");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
    return *this;
}

CMatrix& CMatrix::operator*=(Complex scale)
{
    for (auto& z : data_) z *= scale;
    return *this;
}

void CMatrix::add_outer(std::span<const Complex> u, double w)
{
    if (u.size() != dim_) throw Error(ErrorKind::DimensionMismatch, "outer product length");
    for (std::size_t i = 0; i < dim_; ++i) {
        const Complex ui = w * u[i];
        for (std::size_t j = 0; j < dim_; ++j) (*this)(i, j) += ui * std::conj(u[j]);
    }
}

CMatrix operator*(const CMatrix& lhs, const CMatrix& rhs)
{
    if (lhs.dim() != rhs.dim()) throw Error(ErrorKind::DimensionMismatch, "matrix product");
    const std::size_t n = lhs.dim();
    CMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const Complex l = lhs(i, k);
            if (l == Complex{}) continue;
            for (std::size_t j = 0; j < n; ++j) out(i, j) += l * rhs(k, j);
        }
    return out;
}

Complex vdot(std::span<const Complex> u, std::span<const Complex> v)
{
    if (u.size() != v.size()) throw Error(ErrorKind::DimensionMismatch, "inner product lengths");
    Complex acc{};
    for (std::size_t i = 0; i < u.size(); ++i) acc += std::conj(u[i]) * v[i];
    return acc;
}

double norm(std::span<const Complex> v)
{
    double s = 0.0;
    for (const auto& z : v) s += std::norm(z);
    return std::sqrt(s);
}

CVector EigDecomp::eigenvector(std::size_t k) const
{
    const std::size_t n = eigenvectors.dim();
    CVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = eigenvectors(i, k);
    return v;
}

namespace {

double off_diagonal_norm(const CMatrix& a)
{
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

// Annihilates a(p,q) with V = diag-phase * real rotation, A <- V^* A V, Z <- Z V.
void rotate(CMatrix& a, CMatrix& z, std::size_t p, std::size_t q)
{
    const Complex apq = a(p, q);
    const double mag = std::abs(apq);
    if (mag == 0.0) return;
    const Complex phase = apq / mag;

    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double theta = (aqq - app) / (2.0 * mag);
    const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;

    // Columns p,q of V.
    const Complex vpp = c;
    const Complex vqp = -s * std::conj(phase);
    const Complex vpq = s;
    const Complex vqq = c * std::conj(phase);

    const std::size_t n = a.dim();
    for (std::size_t k = 0; k < n; ++k) {
        const Complex akp = a(k, p);
        const Complex akq = a(k, q);
        a(k, p) = akp * vpp + akq * vqp;
        a(k, q) = akp * vpq + akq * vqq;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const Complex apk = a(p, k);
        const Complex aqk = a(q, k);
        a(p, k) = std::conj(vpp) * apk + std::conj(vqp) * aqk;
        a(q, k) = std::conj(vpq) * apk + std::conj(vqq) * aqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();

    for (std::size_t k = 0; k < n; ++k) {
        const Complex zkp = z(k, p);
        const Complex zkq = z(k, q);
        z(k, p) = zkp * vpp + zkq * vqp;
        z(k, q) = zkp * vpq + zkq * vqq;
    }
}

} // namespace

EigDecomp hermitian_eig(const CMatrix& m)
{
    const std::size_t n = m.dim();
    const double scale = m.frobenius_norm();
    if (m.hermitian_defect() > kHermitianTol * std::max(1.0, scale))
        throw Error(ErrorKind::NotHermitian, "matrix is not Hermitian within tolerance");

    // Work on the exactly Hermitian part.
    CMatrix a = m;
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = a(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
            a(i, j) = avg;
            a(j, i) = std::conj(avg);
        }
    }
    CMatrix z = CMatrix::identity(n);

    const double target = 1e-14 * scale;
    int sweep = 0;
    while (off_diagonal_norm(a) > target) {
        if (sweep == kMaxJacobiSweeps)
            throw Error(ErrorKind::NoConvergence, "Jacobi iteration did not converge in 50 sweeps");
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) rotate(a, z, p, q);
        ++sweep;
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

    EigDecomp out{std::vector<double>(n), CMatrix(n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = z(i, order[k]);
    }
    return out;
}

double rank_threshold(std::span<const double> eigenvalues, double tol)
{
    double largest = 0.0;
    for (double l : eigenvalues) largest = std::max(largest, std::abs(l));
    return tol * std::max(1.0, largest);
}

std::size_t rank_of(const EigDecomp& eig, double tol)
{
    const double cut = rank_threshold(eig.eigenvalues, tol);
    return static_cast<std::size_t>(
        std::count_if(eig.eigenvalues.begin(), eig.eigenvalues.end(), [&](double l) { return std::abs(l) > cut; }));
}

std::size_t rank_of(const CMatrix& m, double tol) { return rank_of(hermitian_eig(m), tol); }

std::vector<CVector> kernel_basis(const EigDecomp& eig, double tol)
{
    const double cut = rank_threshold(eig.eigenvalues, tol);
    std::vector<CVector> basis;
    for (std::size_t k = 0; k < eig.eigenvalues.size(); ++k)
        if (std::abs(eig.eigenvalues[k]) <= cut) basis.push_back(eig.eigenvector(k));
    return basis;
}

std::vector<CVector> kernel_basis(const CMatrix& m, double tol) { return kernel_basis(hermitian_eig(m), tol); }

bool is_psd(const EigDecomp& eig, double tol)
{
    return eig.eigenvalues.empty() || eig.eigenvalues.front() >= -tol;
}

bool is_psd(const CMatrix& m, double tol) { return is_psd(hermitian_eig(m), tol); }

CMatrix range_projector(const EigDecomp& eig, double tol)
{
    const std::size_t n = eig.eigenvectors.dim();
    const double cut = rank_threshold(eig.eigenvalues, tol);
    CMatrix proj(n);
    for (std::size_t k = 0; k < n; ++k)
        if (std::abs(eig.eigenvalues[k]) > cut) proj.add_outer(eig.eigenvector(k), 1.0);
    return proj;
}

CMatrix range_projector(const CMatrix& m, double tol) { return range_projector(hermitian_eig(m), tol); }

CMatrix span_projector(std::span<const CVector> vectors, std::size_t dim, double tol)
{
    CMatrix gram(dim);
    for (const auto& v : vectors) gram.add_outer(v, 1.0);
    return range_projector(gram, tol);
}

} // namespace choi
