#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "choi/certificate.hpp"
#include "choi/error.hpp"
#include "support.hpp"

using namespace choi;
using nlohmann::json;

TEST_CASE("schema")
{
    const json j = to_json(decompose_v1());
    CHECK(j.at("target").at("a") == 1.0);
    CHECK(j.at("terms").size() == 9);
    const json& t = j.at("terms")[0];
    CHECK(t.at("weight").is_number());
    CHECK(t.at("x").size() == 3);
    CHECK(t.at("x")[0].size() == 2);
    CHECK(t.at("y").size() == 3);
    CHECK(j.at("residual").get<double>() <= 1e-12);
}

TEST_CASE("round trip through text")
{
    oracle::Rng rng(1);
    for (int trial = 0; trial < 50; ++trial) {
        const Decomposition d = decompose_general(rng.separable());
        const Decomposition back = decomposition_from_json(json::parse(to_json(d).dump()));
        CHECK(back.size() == d.size());
        CHECK(oracle::max_abs_diff(back.reconstruct(), d.reconstruct()) <= 1e-12 * std::max(1.0, d.total_weight()));
        CHECK(verify_certificate(back).ok);
    }
}

TEST_CASE("tampered certificates fail")
{
    json j = to_json(decompose_general({1.5, 1.5, 1.5}));
    json neg = j;
    neg["terms"][0]["weight"] = -neg["terms"][0]["weight"].get<double>();
    const VerifyResult rn = verify_certificate(decomposition_from_json(neg));
    CHECK_FALSE(rn.weights_positive);
    CHECK_FALSE(rn.ok);

    json pert = j;
    pert["terms"][0]["x"][0][0] = pert["terms"][0]["x"][0][0].get<double>() + 1e-3;
    const VerifyResult rp = verify_certificate(decomposition_from_json(pert));
    CHECK(rp.residual > 1e-8);
    CHECK_FALSE(rp.ok);
}

TEST_CASE("malformed certificates")
{
    auto kind = [](const json& j) {
        try {
            decomposition_from_json(j);
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::NotHermitian;
    };
    const json good = to_json(decompose_v1());
    CHECK(kind(json::object()) == ErrorKind::MalformedCertificate);
    json j = good;
    j["terms"][0]["x"].erase(2);
    CHECK(kind(j) == ErrorKind::MalformedCertificate);
    j = good;
    j["terms"][0]["weight"] = "heavy";
    CHECK(kind(j) == ErrorKind::MalformedCertificate);
    j = good;
    j["target"]["b"] = -1.0;
    CHECK(kind(j) == ErrorKind::MalformedCertificate);
    j = good;
    j.erase("residual");
    CHECK_NOTHROW(decomposition_from_json(j));
}
