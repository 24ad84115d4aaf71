#pragma once

#include <stdexcept>
#include <string>

namespace ghw {

enum class ErrorKind {
    Parse,
    Usage,
    ZeroCode,
    LengthCapExceeded,
    CapExceeded,
    EmptyAmbient,
    TooFewGenerators,
    DimensionTooSmall,
    LengthMismatch,
    TheoremViolation,
};

/// Base exception for every failure raised by the library.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Process exit status associated with an error kind (0 is reserved for success).
[[nodiscard]] inline int exit_code(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::LengthCapExceeded:
    case ErrorKind::CapExceeded:
        return 2;
    case ErrorKind::TheoremViolation:
        return 3;
    default:
        return 1;
    }
}

}  // namespace ghw
