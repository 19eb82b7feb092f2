#pragma once

#include <stdexcept>
#include <string>

namespace fspace {

// Domain error codes. The CLI maps any Error to exit code 1 and prints the
// code name followed by the message.
enum class ErrorCode {
    InvalidPoset,
    InvalidMatrix,
    InvalidComplex,
    NonSquare,
    NonBinaryEntry,
    NonZeroDiagonal,
    SizeLimitExceeded,
    NotAGroup,
    NotOrderPreserving,
    NotFree,
    OrbitSizeMismatch,
    NotZ2,
    InternalInvariantViolation,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }
    const char* code_name() const { return error_code_name(code_); }

private:
    ErrorCode code_;
};

// Malformed input text (bad syntax, out-of-range index, wrong shape).
// Line numbers are 1-based; line 0 means the problem is not tied to a line.
class FormatError : public std::runtime_error {
public:
    FormatError(std::string source, int line, const std::string& message)
        : std::runtime_error(source + (line > 0 ? ":" + std::to_string(line) : "") +
                             ": " + message),
          source_(std::move(source)),
          line_(line) {}

    const std::string& source() const { return source_; }
    int line() const { return line_; }

private:
    std::string source_;
    int line_;
};

}  // namespace fspace
