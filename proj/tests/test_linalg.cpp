#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "choi/error.hpp"
#include "choi/linalg.hpp"
#include "support.hpp"

using namespace choi;

namespace {

CMatrix reconstruct(const EigDecomp& e)
{
    const std::size_t n = e.eigenvalues.size();
    CMatrix m(n);
    for (std::size_t k = 0; k < n; ++k) {
        const CVector v = e.eigenvector(k);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) += e.eigenvalues[k] * v[i] * std::conj(v[j]);
    }
    return m;
}

double projector_defect(const CMatrix& p)
{
    return std::max(oracle::max_abs_diff(p * p, p), oracle::max_abs_diff(p.adjoint(), p));
}

} // namespace

TEST_CASE("eigenvalues of simple matrices")
{
    const EigDecomp id = hermitian_eig(CMatrix::identity(9));
    for (double l : id.eigenvalues) CHECK(l == doctest::Approx(1.0).epsilon(1e-14));

    const EigDecomp d = hermitian_eig(CMatrix::diagonal(std::vector<double>{3.0, -1.0, 2.0, 0.5}));
    REQUIRE(d.eigenvalues.size() == 4);
    CHECK(d.eigenvalues[0] == doctest::Approx(-1.0));
    CHECK(d.eigenvalues[1] == doctest::Approx(0.5));
    CHECK(d.eigenvalues[2] == doctest::Approx(2.0));
    CHECK(d.eigenvalues[3] == doctest::Approx(3.0));

    // all-ones 3x3 block: {0, 0, 3}
    CMatrix ones(3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) ones(i, j) = 1.0;
    const EigDecomp o = hermitian_eig(ones);
    CHECK(std::abs(o.eigenvalues[0]) < 1e-14);
    CHECK(std::abs(o.eigenvalues[1]) < 1e-14);
    CHECK(o.eigenvalues[2] == doctest::Approx(3.0));

    // [[2, i], [-i, 2]] has eigenvalues 1 and 3.
    CMatrix h(2);
    h(0, 0) = 2.0;
    h(1, 1) = 2.0;
    h(0, 1) = Complex(0, 1);
    h(1, 0) = Complex(0, -1);
    const EigDecomp e = hermitian_eig(h);
    CHECK(e.eigenvalues[0] == doctest::Approx(1.0));
    CHECK(e.eigenvalues[1] == doctest::Approx(3.0));
}

TEST_CASE("non-Hermitian input is rejected")
{
    CMatrix m(3);
    m(0, 1) = 1.0;
    try {
        hermitian_eig(m);
        FAIL("expected NotHermitian");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotHermitian);
    }
}

TEST_CASE("random Hermitian matrices: spectral reconstruction and orthonormal eigenvectors")
{
    oracle::Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rng.integer(1, 9));
        const CMatrix m = rng.hermitian(n);
        const EigDecomp e = hermitian_eig(m);
        CHECK(std::is_sorted(e.eigenvalues.begin(), e.eigenvalues.end()));
        CHECK(oracle::max_abs_diff(reconstruct(e), m) <= 1e-10 * std::max(1.0, m.frobenius_norm()));
        const CMatrix gram = e.eigenvectors.adjoint() * e.eigenvectors;
        CHECK(oracle::max_abs_diff(gram, CMatrix::identity(n)) <= 1e-12);
        double sum = 0.0;
        for (double l : e.eigenvalues) sum += l;
        CHECK(sum == doctest::Approx(m.trace().real()).epsilon(1e-10));
    }
}

TEST_CASE("rank and kernel")
{
    CHECK(rank_of(oracle::state(1, 1, 1)) == 7);
    CHECK(rank_of(oracle::state_gamma(1, 1, 1)) == 6);
    CHECK(rank_of(CMatrix(9)) == 0);
    CHECK(kernel_basis(CMatrix::identity(9)).empty());

    oracle::Rng rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        // B B^* with B of random width r has rank r.
        const std::size_t n = 9, r = static_cast<std::size_t>(rng.integer(0, 9));
        CMatrix m(n);
        for (std::size_t k = 0; k < r; ++k) {
            CVector u(n);
            for (auto& x : u) x = rng.complex();
            m.add_outer(u, 1.0);
        }
        CHECK(rank_of(m) == r);
        const auto ker = kernel_basis(m);
        CHECK(ker.size() + rank_of(m) == n);
        for (const auto& v : ker) CHECK(norm(m.apply(v)) <= 1e-9 * std::max(1.0, m.frobenius_norm()));
    }
}

TEST_CASE("PSD test")
{
    CHECK(is_psd(oracle::state(2, 2, 0.5)));
    CHECK_FALSE(is_psd(oracle::state(0.5, 1, 1)));
    CHECK(is_psd(CMatrix(9)));

    // Leading principal minors of a 2x2: PSD iff diag >= 0 and det >= 0.
    oracle::Rng rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        CMatrix m(2);
        const double p = rng.uniform(-1, 2), q = rng.uniform(-1, 2);
        const Complex off = rng.complex();
        m(0, 0) = p;
        m(1, 1) = q;
        m(0, 1) = off;
        m(1, 0) = std::conj(off);
        const bool expect = p >= 0 && q >= 0 && p * q - std::norm(off) >= 0;
        if (std::abs(p * q - std::norm(off)) > 1e-6 && std::abs(p) > 1e-6 && std::abs(q) > 1e-6)
            CHECK(is_psd(m) == expect);
    }
}

TEST_CASE("range projectors")
{
    CHECK(oracle::max_abs_diff(range_projector(CMatrix::identity(9)), CMatrix::identity(9)) <= 1e-12);

    CVector z{1.0, Complex(0, 2), -1.0};
    CMatrix zz(3);
    zz.add_outer(z, 1.0);
    CMatrix expect = zz;
    expect *= 1.0 / 6.0;
    CHECK(oracle::max_abs_diff(range_projector(zz), expect) <= 1e-12);

    const CMatrix p = range_projector(oracle::state(1, 1, 1));
    CHECK(p.trace().real() == doctest::Approx(7.0).epsilon(1e-9));
    CHECK(projector_defect(p) <= 1e-12);

    oracle::Rng rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<CVector> vs(static_cast<std::size_t>(rng.integer(1, 4)), CVector(9));
        for (auto& v : vs)
            for (auto& x : v) x = rng.complex();
        const CMatrix s = span_projector(vs, 9);
        CHECK(projector_defect(s) <= 1e-10);
        CHECK(s.trace().real() == doctest::Approx(static_cast<double>(vs.size())).epsilon(1e-9));
        for (const auto& v : vs) CHECK(norm(s.apply(v)) == doctest::Approx(norm(v)).epsilon(1e-10));
    }
}
