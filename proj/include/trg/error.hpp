#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace trg {

enum class ErrorCode {
    OutOfRange,
    Overlap,
    BothEmpty,
    Duplicate,
    InvalidOrder,
    IndexOutOfRange,
    PreconditionViolated,
    NotAWalk,
    TooSmall,
    Unsupported,
    InvalidRange,
    UnknownTheorem,
    ParseError,
};

std::string_view to_string(ErrorCode code);

/// Domain error raised by every validating operation in the library.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace trg
