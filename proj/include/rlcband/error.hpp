#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rlcband {

enum class ErrorCode {
  InvalidInterval,
  NonFinite,
  Overflow,
  DivisionByZeroInterval,
  NegativeArgument,
  NonPositiveArgument,
  DomainViolation,
  PrecisionLoss,
  InvalidSpec,
  NotUnderdamped,
  StepSizeRejected,
  PeakNotCovered,
  MalformedRow,
  NonMonotoneTime,
  TooFewSamples,
  NotSettled,
  NoStepDetected,
  OverdampedTrace,
  TimeRangeMismatch,
  Io,
  Config,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library. The code identifies the failure class;
/// what() carries a human-readable message prefixed with the code name.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rlcband
