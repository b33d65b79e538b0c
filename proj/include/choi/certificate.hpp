#pragma once

#include "choi/decomposer.hpp"

#include "json.hpp"

namespace choi {

/// {"target": {"a","b","c"}, "terms": [{"weight", "x": [[re,im] x3], "y": ...}], "residual"}
nlohmann::json to_json(const Decomposition& d);

/// Throws MalformedCertificate on any schema violation. The stored residual
/// is ignored; callers recompute it.
Decomposition decomposition_from_json(const nlohmann::json& j);

struct VerifyResult {
    double residual = 0.0;
    bool weights_positive = false;
    bool ok = false;
};

inline constexpr double kCertificateTol = 1e-8;

VerifyResult verify_certificate(const Decomposition& d, double tol = kCertificateTol);

} // namespace choi
