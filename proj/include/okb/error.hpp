#pragma once

#include <stdexcept>
#include <string>

namespace okb {

/// Reasons a well-formed request has no mathematical answer.
enum class MathErrorKind {
  kSingularSystem,
  kNotInCone,
  kUnboundedThreshold,
  kOrbitBoundExceeded,
  kNotPseudoEffective,
  kNotBig,
  kNotNef,
  kConeNotFinitelyGenerated,
  kUnsupported,
  kPredictedNonBig,
  kInvariantViolation,
};

/// Thrown for mathematical impossibility (non-big input, singular system,
/// ...). Usage errors such as an out-of-range n use std::invalid_argument.
class MathError : public std::runtime_error {
 public:
  MathError(MathErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  MathErrorKind kind() const noexcept { return kind_; }

 private:
  MathErrorKind kind_;
};

}  // namespace okb
