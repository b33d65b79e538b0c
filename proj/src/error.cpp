#include "choi/error.hpp"

namespace choi {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::NotPPT: return "NotPPT";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::ConstraintViolated: return "ConstraintViolated";
    case ErrorKind::ZeroAlpha: return "ZeroAlpha";
    case ErrorKind::DegenerateVector: return "DegenerateVector";
    case ErrorKind::DegeneratePair: return "DegeneratePair";
    case ErrorKind::NotInQ: return "NotInQ";
    case ErrorKind::NotSeparable: return "NotSeparable";
    case ErrorKind::UnsupportedElement: return "UnsupportedElement";
    case ErrorKind::NotPositiveMap: return "NotPositiveMap";
    case ErrorKind::MalformedCertificate: return "MalformedCertificate";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind)
{
}

} // namespace choi
