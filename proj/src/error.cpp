#include "lieder/error.hpp"

namespace lieder {

const char* to_string(ErrorKind k) {
    switch (k) {
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::SpectrumNotRational: return "SpectrumNotRational";
    case ErrorKind::DivisibilityViolated: return "DivisibilityViolated";
    case ErrorKind::InvalidM: return "InvalidM";
    case ErrorKind::SummandsNotMarked: return "SummandsNotMarked";
    case ErrorKind::NotNilpotent: return "NotNilpotent";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::WitnessVerificationFailed: return "WitnessVerificationFailed";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationFailed: return "ValidationFailed";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::NotADerivation: return "NotADerivation";
    case ErrorKind::GenericDimUnstable: return "GenericDimUnstable";
    }
    return "UnknownError";
}

Error::Error(ErrorKind kind, const std::string& msg)
    : std::runtime_error(std::string(to_string(kind)) + ": " + msg), kind_(kind) {}

void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

} // namespace lieder
