#pragma once

#include <stdexcept>
#include <string>

namespace ifree {

enum class ErrorKind {
    OrderMismatch,
    SizeMismatch,
    NotInvertible,
    InvalidArgument,
    InsufficientSupport,
    PreconditionViolated,
    Schema,
};

const char* to_string(ErrorKind kind);

/// Every domain failure raised by the library carries its kind so the CLI can report it.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

inline void require(bool condition, ErrorKind kind, const std::string& message) {
    if (!condition) fail(kind, message);
}

}  // namespace ifree
