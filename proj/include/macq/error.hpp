#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace macq {

enum class ErrorKind {
    NonDivisible,
    SizeMismatch,
    BoxOutside,
    NotStandard,
    Disconnected,
    NonIntegral,
    DegreeMismatch,
    InvalidInput,
};

std::string_view to_string(ErrorKind kind);

/// Every recoverable failure in the library is reported through this type.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::NonDivisible: return "NON-DIVISIBLE";
    case ErrorKind::SizeMismatch: return "SIZE-MISMATCH";
    case ErrorKind::BoxOutside: return "BOX-OUTSIDE";
    case ErrorKind::NotStandard: return "NOT-STANDARD";
    case ErrorKind::Disconnected: return "DISCONNECTED";
    case ErrorKind::NonIntegral: return "NON-INTEGRAL";
    case ErrorKind::DegreeMismatch: return "DEGREE-MISMATCH";
    case ErrorKind::InvalidInput: return "INVALID-INPUT";
    }
    return "UNKNOWN";
}

} // namespace macq
