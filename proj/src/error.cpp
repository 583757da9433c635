#include "skewnorm/error.hpp"

namespace skewnorm {

std::string_view error_code_name(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::VariantMismatch: return "VariantMismatch";
    case ErrorCode::UnsupportedRing: return "UnsupportedRing";
    case ErrorCode::ExhaustedCandidates: return "ExhaustedCandidates";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::IncompatibleMaps: return "IncompatibleMaps";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::CertificateFailed: return "CertificateFailed";
    case ErrorCode::TwistMismatch: return "TwistMismatch";
    case ErrorCode::NotInF: return "NotInF";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::NoWitnessFound: return "NoWitnessFound";
    case ErrorCode::NotARoot: return "NotARoot";
    case ErrorCode::BoundViolated: return "BoundViolated";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::RelationNotInSubring: return "RelationNotInSubring";
    case ErrorCode::InvariantViolated: return "InvariantViolated";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::UnknownScalarLiteral: return "UnknownScalarLiteral";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::UsageError: return "UsageError";
    }
    return "Unknown";
}

bool is_usage_error(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::UnknownVariable:
    case ErrorCode::UnknownScalarLiteral:
    case ErrorCode::ConfigError:
    case ErrorCode::UsageError:
        return true;
    default:
        return false;
    }
}

} // namespace skewnorm
