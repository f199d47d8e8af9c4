#include "levytail/errors.hpp"

namespace levytail {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidCutoff: return "InvalidCutoff";
    case ErrorCode::NonIntegrableTail: return "NonIntegrableTail";
    case ErrorCode::QuadratureFailure: return "QuadratureFailure";
    case ErrorCode::UndeclaredVariation: return "UndeclaredVariation";
    case ErrorCode::AlphaOutOfRange: return "AlphaOutOfRange";
    case ErrorCode::DegenerateSigma: return "DegenerateSigma";
    case ErrorCode::MissingGlobalM: return "MissingGlobalM";
    case ErrorCode::WrongVariation: return "WrongVariation";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::MissingLipschitzCert: return "MissingLipschitzCert";
    case ErrorCode::CertTooWeak: return "CertTooWeak";
    case ErrorCode::WindowViolated: return "WindowViolated";
    case ErrorCode::LambdaOutOfRange: return "LambdaOutOfRange";
    case ErrorCode::NoApplicableBound: return "NoApplicableBound";
    case ErrorCode::ShapeTooLarge: return "ShapeTooLarge";
    case ErrorCode::UnsupportedJumpLaw: return "UnsupportedJumpLaw";
    case ErrorCode::SchemeInfeasible: return "SchemeInfeasible";
    case ErrorCode::TruthUnavailable: return "TruthUnavailable";
    case ErrorCode::TooFewPoints: return "TooFewPoints";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

bool is_numeric_failure(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonIntegrableTail:
    case ErrorCode::QuadratureFailure:
    case ErrorCode::SchemeInfeasible:
    case ErrorCode::TooFewPoints:
      return true;
    default:
      return false;
  }
}

LevyError::LevyError(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {}

void raise(ErrorCode code, const std::string& message) { throw LevyError(code, message); }

}  // namespace levytail
