#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "choi/classifier.hpp"
#include "choi/error.hpp"
#include "support.hpp"

using namespace choi;

TEST_CASE("PPT predicate")
{
    CHECK(is_ppt_params({1, 1, 1}));
    CHECK_FALSE(is_ppt_params({1.2, 3, 0.2}));
    CHECK_FALSE(is_ppt_params({0.5, 2, 2}));
}

TEST_CASE("separability predicate")
{
    CHECK(is_separable_params({2, 3, 1.0 / 3}));
    CHECK_FALSE(is_separable_params({1, 2, 0.5}));
    CHECK(is_separable_params({1.5, 1.5, 1.5}));
    CHECK(is_separable_params({1.5, 1.5, 0.75})); // equality case
}

TEST_CASE("PPTES predicate")
{
    CHECK(is_pptes_params({1, 2, 0.5}));
    CHECK(is_pptes_params({1, 5, 0.2}));
    CHECK_FALSE(is_pptes_params({1.5, 1.1, 0.95}));
    CHECK_FALSE(is_pptes_params({2, 5, 0.2}));
}

TEST_CASE("verdicts")
{
    CHECK(classify({0.5, 1, 1}).verdict == Verdict::NotState);
    CHECK(classify({1.2, 3, 0.2}).verdict == Verdict::NPT);
    CHECK(classify({1, 2, 0.5}).verdict == Verdict::PPTES);
    CHECK(classify({1, 2, 3}).verdict == Verdict::SeparableBoundaryOfC);
    CHECK(classify({1.5, 1.5, 1.5}).verdict == Verdict::SeparableInteriorOfC);
    CHECK(classify({1.5, 1.5, 0.75}).verdict == Verdict::SeparableBoundaryOfC);
    CHECK(classify({3, 2, 2}).verdict == Verdict::SeparableInteriorOfC);
    CHECK(classify({1, 2, 3}, 1e-6).tolerance_used == 1e-6);
}

TEST_CASE("boundary elements")
{
    CHECK(boundary_element({1, 1, 1}).tag == BoundaryTag::V1);
    const BoundaryElement vb = boundary_element({2, 3, 1.0 / 3});
    CHECK(vb.tag == BoundaryTag::Vb);
    REQUIRE(vb.b);
    CHECK(*vb.b == doctest::Approx(3.0));
    CHECK(boundary_element({2, 3, 0.333333333}).tag == BoundaryTag::Vb);

    const BoundaryElement eb = boundary_element({1.5, 1.5, 0.75});
    CHECK(eb.tag == BoundaryTag::EbEdge);
    REQUIRE(eb.b);
    REQUIRE(eb.s);
    CHECK(*eb.b == doctest::Approx(2.0));
    CHECK(*eb.s == doctest::Approx(0.5));

    CHECK(boundary_element({5, 1, 1}).tag == BoundaryTag::E1);
    CHECK(boundary_element({2, 1, 1}).tag == BoundaryTag::E1);
    const BoundaryElement ehb = boundary_element({3, 2, 0.5});
    CHECK(ehb.tag == BoundaryTag::EHatB);
    CHECK(*ehb.b == doctest::Approx(2.0));
    CHECK(boundary_element({1, 1, 4}).tag == BoundaryTag::E0);
    CHECK(boundary_element({1, 4, 1}).tag == BoundaryTag::EInf);
    CHECK(boundary_element({1, 2, 3}).tag == BoundaryTag::F);
    CHECK(boundary_element({1.5, 1.5, 1.5}).tag == BoundaryTag::Interior);
    CHECK(boundary_element({1, 2, 0.5}).tag == BoundaryTag::Exterior);
    CHECK(to_string(BoundaryTag::EHatB) == "e^b");
}

TEST_CASE("extension to the a = 2 plane")
{
    const VertexExtension e = extend_to_vertex({1.5, 1.5, 0.75});
    CHECK(e.vertex.a == doctest::Approx(2.0));
    CHECK(e.vertex.b == doctest::Approx(2.0));
    CHECK(e.vertex.c == doctest::Approx(0.5));
    CHECK(e.weight == doctest::Approx(0.5));

    const VertexExtension f = extend_to_vertex({1.5, 1.5, 1.5});
    CHECK(f.vertex.b == doctest::Approx(2.0));
    CHECK(f.vertex.c == doctest::Approx(2.0));

    oracle::Rng rng(1);
    for (int trial = 0; trial < 100; ++trial) {
        const double b = rng.uniform(0.1, 10), s = rng.uniform(0.01, 0.99);
        const StateParams p{1 + s, 1 + s * (b - 1), 1 + s * (1 / b - 1)};
        const VertexExtension v = extend_to_vertex(p);
        CHECK(v.vertex.b == doctest::Approx(b).epsilon(1e-10));
        CHECK(v.vertex.c == doctest::Approx(1 / b).epsilon(1e-10));
        CHECK(v.weight == doctest::Approx(s).epsilon(1e-12));
        const BoundaryElement el = boundary_element(p);
        CHECK(el.tag == BoundaryTag::EbEdge);
    }
    CHECK_THROWS_AS(extend_to_vertex({1, 1, 1}), Error);
    CHECK_THROWS_AS(extend_to_vertex({2.5, 1, 1}), Error);
}

TEST_CASE("closed-form classification agrees with spectra and witnesses")
{
    // Oracle: PPT from closed-form smallest eigenvalues, separability from a
    // brute-force minimum over Phi(t). Points within 1e-6 of a defining surface are skipped.
    int compared = 0;
    for (int i = 0; i <= 30; ++i)
        for (int j = 0; j <= 30; ++j)
            for (int k = 0; k <= 30; ++k) {
                const double a = 0.1 * i, b = 0.1 * j, c = 0.1 * k;
                const double ea = oracle::min_eig_state(a, b, c), eg = oracle::min_eig_gamma(a, b, c);
                if (std::abs(ea) < 1e-6 || std::abs(eg) < 1e-6) continue;
                const bool ppt = ea > 0 && eg > 0;
                const Classification cls = classify({a, b, c});
                if (ea < 0) {
                    CHECK(cls.verdict == Verdict::NotState);
                    continue;
                }
                CHECK(cls.is_ppt() == ppt);
                if (!ppt) continue;
                const double w = oracle::witness_min(a, b, c, 2001);
                if (std::abs(w) < 1e-6) continue;
                CHECK(cls.is_separable() == (w > 0));
                CHECK(is_pptes_params({a, b, c}) == (w < 0));
                ++compared;
            }
    CHECK(compared > 1000);
}

TEST_CASE("boundary tags partition the separable points")
{
    oracle::Rng rng(2);
    for (int trial = 0; trial < 2000; ++trial) {
        const StateParams p = trial % 2 ? rng.separable() : StateParams{rng.uniform(0, 4), rng.uniform(0, 4), rng.uniform(0, 4)};
        const Classification cls = classify(p);
        const BoundaryTag tag = boundary_element(p).tag;
        if (!cls.is_separable())
            CHECK(tag == BoundaryTag::Exterior);
        else if (cls.verdict == Verdict::SeparableInteriorOfC)
            CHECK(tag == BoundaryTag::Interior);
        else
            CHECK((tag != BoundaryTag::Interior && tag != BoundaryTag::Exterior));
    }
}
