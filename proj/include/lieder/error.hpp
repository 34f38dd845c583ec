#pragma once

#include <stdexcept>
#include <string>

namespace lieder {

enum class ErrorKind {
    CapExceeded,
    SpectrumNotRational,
    DivisibilityViolated,
    InvalidM,
    SummandsNotMarked,
    NotNilpotent,
    PreconditionViolated,
    WitnessVerificationFailed,
    ParseError,
    ValidationFailed,
    UnknownName,
    InternalInconsistency,
    NotADerivation,
    GenericDimUnstable,
};

const char* to_string(ErrorKind k);

// Library-wide exception. `kind` drives the CLI exit-code mapping.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg);
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& msg);

} // namespace lieder
