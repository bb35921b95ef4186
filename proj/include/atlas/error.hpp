#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace atlas {

enum class ErrorKind {
  InvalidInput,
  DegenerateExponent,
  RankDeficient,
  NoPositiveSolution,
  DimensionUnsupported,
  NonIntegerResult,
  NotPairwiseCoprime,
  NotASphere,
  NonDivisible,
  NonPositiveScale,
  NotPositiveClass,
  NotNegativeClass,
  NoEWPair,
  DegenerateMetric,
  PoleProximity,
  BoundsTooLarge,
  IoFailure,
  CorruptLine,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Single exception type for the library; `kind()` distinguishes failure modes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace atlas
