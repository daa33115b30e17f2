#include "upmnet/error.hpp"

namespace upmnet {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NotPerfect: return "NotPerfect";
    case ErrorCode::NotABridge: return "NotABridge";
    case ErrorCode::TooManyPairs: return "TooManyPairs";
    case ErrorCode::NotCorrect: return "NotCorrect";
    case ErrorCode::NotAPar: return "NotAPar";
    case ErrorCode::NotMaximal: return "NotMaximal";
    case ErrorCode::NotMllCorrect: return "NotMllCorrect";
    case ErrorCode::InvalidDerivation: return "InvalidDerivation";
    case ErrorCode::NotAlternating: return "NotAlternating";
    case ErrorCode::NotASwitchingCycle: return "NotASwitchingCycle";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace upmnet
