#pragma once

#include <stdexcept>
#include <string>

namespace cayley {

enum class ErrorCode {
  kInvalidArgument,
  kMissingVariable,
  kNotDivisible,
  kTargetTooSmall,
  kInvalidDimension,
  kCapExceeded,
  kTooFewPoints,
  kNonPositiveTau,
  kDegenerateSimplex,
  kInvalidDistance,
  kParseError,
};

inline const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kMissingVariable: return "MissingVariable";
    case ErrorCode::kNotDivisible: return "NotDivisible";
    case ErrorCode::kTargetTooSmall: return "TargetTooSmall";
    case ErrorCode::kInvalidDimension: return "InvalidDimension";
    case ErrorCode::kCapExceeded: return "CapExceeded";
    case ErrorCode::kTooFewPoints: return "TooFewPoints";
    case ErrorCode::kNonPositiveTau: return "NonPositiveTau";
    case ErrorCode::kDegenerateSimplex: return "DegenerateSimplex";
    case ErrorCode::kInvalidDistance: return "InvalidDistance";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cayley
