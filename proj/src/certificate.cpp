#include "choi/certificate.hpp"

#include "choi/error.hpp"

#include <cmath>

namespace choi {

namespace {

nlohmann::json vec_to_json(const CVec3& v)
{
    auto arr = nlohmann::json::array();
    for (const auto& z : v) arr.push_back({z.real(), z.imag()});
    return arr;
}

double finite_number(const nlohmann::json& j, const char* what)
{
    if (!j.is_number()) throw Error(ErrorKind::MalformedCertificate, std::string(what) + " must be a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw Error(ErrorKind::MalformedCertificate, std::string(what) + " must be finite");
    return v;
}

CVec3 vec_from_json(const nlohmann::json& j, const char* what)
{
    if (!j.is_array() || j.size() != 3)
        throw Error(ErrorKind::MalformedCertificate, std::string(what) + " must hold three [re, im] pairs");
    CVec3 v;
    for (std::size_t k = 0; k < 3; ++k) {
        const auto& pair = j[k];
        if (!pair.is_array() || pair.size() != 2)
            throw Error(ErrorKind::MalformedCertificate, std::string(what) + " entries must be [re, im]");
        v[k] = {finite_number(pair[0], what), finite_number(pair[1], what)};
    }
    return v;
}

} // namespace

nlohmann::json to_json(const Decomposition& d)
{
    nlohmann::json j;
    j["target"] = {{"a", d.target().a}, {"b", d.target().b}, {"c", d.target().c}};
    auto terms = nlohmann::json::array();
    for (const auto& t : d.terms())
        terms.push_back({{"weight", t.weight}, {"x", vec_to_json(t.vector.x)}, {"y", vec_to_json(t.vector.y)}});
    j["terms"] = std::move(terms);
    j["residual"] = d.residual();
    return j;
}

Decomposition decomposition_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("target") || !j.contains("terms"))
        throw Error(ErrorKind::MalformedCertificate, "certificate needs \"target\" and \"terms\"");
    const auto& tj = j["target"];
    if (!tj.is_object() || !tj.contains("a") || !tj.contains("b") || !tj.contains("c"))
        throw Error(ErrorKind::MalformedCertificate, "target needs a, b and c");
    const StateParams target{finite_number(tj["a"], "a"), finite_number(tj["b"], "b"), finite_number(tj["c"], "c")};
    if (target.a < 0.0 || target.b < 0.0 || target.c < 0.0)
        throw Error(ErrorKind::MalformedCertificate, "target parameters must be nonnegative");

    const auto& terms_json = j["terms"];
    if (!terms_json.is_array()) throw Error(ErrorKind::MalformedCertificate, "terms must be an array");
    std::vector<Term> terms;
    terms.reserve(terms_json.size());
    for (const auto& tj_term : terms_json) {
        if (!tj_term.is_object() || !tj_term.contains("weight") || !tj_term.contains("x") || !tj_term.contains("y"))
            throw Error(ErrorKind::MalformedCertificate, "each term needs weight, x and y");
        terms.push_back({finite_number(tj_term["weight"], "weight"),
                         {vec_from_json(tj_term["x"], "x"), vec_from_json(tj_term["y"], "y")}});
    }
    return {target, std::move(terms)};
}

VerifyResult verify_certificate(const Decomposition& d, double tol)
{
    VerifyResult r;
    r.residual = d.residual();
    r.weights_positive = d.all_weights_positive();
    r.ok = r.weights_positive && r.residual <= tol;
    return r;
}

} // namespace choi
