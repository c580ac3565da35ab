#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace setmart {

enum class ErrorCode {
  kInvalidParams,
  kLevelOutOfRange,
  kDimensionMismatch,
  kEmptyInput,
  kZeroDirection,
  kNumericalBreakdown,
  kTooLarge,
  kEmptyFamily,
  kNotAMartingale,
  kNotASubmartingale,
  kForwardInfeasible,
  kSelectorEscape,
  kHypothesisViolated,
  kParseError,
  kConfigError,
};

std::string_view to_string(ErrorCode code);

// Operational failures. Analytical outcomes that are expected answers
// (an infeasible LP, a missing Hukuhara difference) are returned as values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// An error tied to a tree node (level, index).
class NodeError : public Error {
 public:
  NodeError(ErrorCode code, int level, std::size_t node, const std::string& what)
      : Error(code, what + " at node (" + std::to_string(level) + "," + std::to_string(node) + ")"),
        level_(level),
        node_(node) {}

  int level() const noexcept { return level_; }
  std::size_t node() const noexcept { return node_; }

 private:
  int level_;
  std::size_t node_;
};

}  // namespace setmart
