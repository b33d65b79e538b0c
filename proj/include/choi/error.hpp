#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace choi {

enum class ErrorKind {
    NotHermitian,
    NoConvergence,
    DimensionMismatch,
    InvalidParams,
    NotPPT,
    OutOfRange,
    ConstraintViolated,
    ZeroAlpha,
    DegenerateVector,
    DegeneratePair,
    NotInQ,
    NotSeparable,
    UnsupportedElement,
    NotPositiveMap,
    MalformedCertificate,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// that callers (the CLI in particular) can branch on it.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace choi
