#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace skewnorm {

enum class ErrorCode {
    DivisionByZero,
    VariantMismatch,
    UnsupportedRing,
    ExhaustedCandidates,
    RingMismatch,
    IncompatibleMaps,
    ZeroPolynomial,
    CertificateFailed,
    TwistMismatch,
    NotInF,
    ArityMismatch,
    PreconditionFailed,
    NoWitnessFound,
    NotARoot,
    BoundViolated,
    SearchExhausted,
    RelationNotInSubring,
    InvariantViolated,
    ParseError,
    UnknownVariable,
    UnknownScalarLiteral,
    ConfigError,
    UsageError,
};

std::string_view error_code_name(ErrorCode code) noexcept;

// Parse/usage/config problems are the caller's fault (exit status 2 in the
// CLI); everything else is a domain error (exit status 1).
bool is_usage_error(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string &message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code), detail_(message)
    {
    }

    ErrorCode code() const noexcept { return code_; }
    // Message without the code prefix.
    const std::string &detail() const noexcept { return detail_; }

private:
    ErrorCode code_;
    std::string detail_;
};

// Parse errors carry a 1-based source position.
class ParseError : public Error {
public:
    ParseError(const std::string &message, std::size_t line, std::size_t column)
        : Error(ErrorCode::ParseError, "line " + std::to_string(line) + ", column " +
                                           std::to_string(column) + ": " + message),
          line_(line), column_(column)
    {
    }

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string &message) { throw Error(code, message); }

} // namespace skewnorm
