#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace levytail {

enum class ErrorCode {
  InvalidCutoff,
  NonIntegrableTail,
  QuadratureFailure,
  UndeclaredVariation,
  AlphaOutOfRange,
  DegenerateSigma,
  MissingGlobalM,
  WrongVariation,
  NotSymmetric,
  MissingLipschitzCert,
  CertTooWeak,
  WindowViolated,
  LambdaOutOfRange,
  NoApplicableBound,
  ShapeTooLarge,
  UnsupportedJumpLaw,
  SchemeInfeasible,
  TruthUnavailable,
  TooFewPoints,
  InvalidArgument,
  ConfigError,
};

std::string_view error_name(ErrorCode code);

// Numerical failures map to CLI exit code 3, precondition failures to 2.
bool is_numeric_failure(ErrorCode code);

class LevyError : public std::runtime_error {
 public:
  LevyError(ErrorCode code, const std::string& message);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& message);

}  // namespace levytail
