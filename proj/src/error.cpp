#include "setmart/error.hpp"

namespace setmart {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidParams: return "InvalidParams";
    case ErrorCode::kLevelOutOfRange: return "LevelOutOfRange";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kZeroDirection: return "ZeroDirection";
    case ErrorCode::kNumericalBreakdown: return "NumericalBreakdown";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kEmptyFamily: return "EmptyFamily";
    case ErrorCode::kNotAMartingale: return "NotAMartingale";
    case ErrorCode::kNotASubmartingale: return "NotASubmartingale";
    case ErrorCode::kForwardInfeasible: return "ForwardInfeasible";
    case ErrorCode::kSelectorEscape: return "SelectorEscape";
    case ErrorCode::kHypothesisViolated: return "HypothesisViolated";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kConfigError: return "ConfigError";
  }
  return "Unknown";
}

}  // namespace setmart
