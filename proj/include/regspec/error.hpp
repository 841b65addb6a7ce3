#pragma once

#include <stdexcept>
#include <string>

namespace regspec {

enum class ErrorKind {
    InvalidParameter,
    Precondition,
    Domain,
    Capacity,
    Sampling,
    Parse,
    InvariantViolation,
    Singularity,
    Convergence,
    NotFound,
    MissingData,
};

const char* to_string(ErrorKind kind);

// All library failures are reported through this exception; `kind` lets
// callers (the CLI in particular) map failures onto exit codes.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidParameter: return "invalid parameter";
    case ErrorKind::Precondition: return "precondition violation";
    case ErrorKind::Domain: return "domain error";
    case ErrorKind::Capacity: return "capacity exceeded";
    case ErrorKind::Sampling: return "sampling failure";
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::InvariantViolation: return "invariant violation";
    case ErrorKind::Singularity: return "singular";
    case ErrorKind::Convergence: return "no convergence";
    case ErrorKind::NotFound: return "not found";
    case ErrorKind::MissingData: return "missing data";
    }
    return "error";
}

} // namespace regspec
