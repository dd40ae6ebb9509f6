#include "rlcband/error.hpp"

namespace rlcband {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidInterval: return "InvalidInterval";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::DivisionByZeroInterval: return "DivisionByZeroInterval";
    case ErrorCode::NegativeArgument: return "NegativeArgument";
    case ErrorCode::NonPositiveArgument: return "NonPositiveArgument";
    case ErrorCode::DomainViolation: return "DomainViolation";
    case ErrorCode::PrecisionLoss: return "PrecisionLoss";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::NotUnderdamped: return "NotUnderdamped";
    case ErrorCode::StepSizeRejected: return "StepSizeRejected";
    case ErrorCode::PeakNotCovered: return "PeakNotCovered";
    case ErrorCode::MalformedRow: return "MalformedRow";
    case ErrorCode::NonMonotoneTime: return "NonMonotoneTime";
    case ErrorCode::TooFewSamples: return "TooFewSamples";
    case ErrorCode::NotSettled: return "NotSettled";
    case ErrorCode::NoStepDetected: return "NoStepDetected";
    case ErrorCode::OverdampedTrace: return "OverdampedTrace";
    case ErrorCode::TimeRangeMismatch: return "TimeRangeMismatch";
    case ErrorCode::Io: return "Io";
    case ErrorCode::Config: return "Config";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace rlcband
