#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace upmnet {

enum class ErrorCode {
  InvalidInput,
  CapExceeded,
  PreconditionViolated,
  NotPerfect,
  NotABridge,
  TooManyPairs,
  NotCorrect,
  NotAPar,
  NotMaximal,
  NotMllCorrect,
  InvalidDerivation,
  NotAlternating,
  NotASwitchingCycle,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it to an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace upmnet
