#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace census {

enum class ErrorKind {
  SubstitutionToZeroPole,
  PoleAtPoint,
  PoleArgument,
  NotUnitConstantTerm,
  NotAugmented,
  NotWeil,
  HigherOrderPole,
  NotPolynomialAfterClearing,
  NegativeBettiCoefficient,
  RoundingFailure,
  IdentityViolation,
  InvalidArgument,
  ParseError,
  UsageError,
};

std::string_view error_name(ErrorKind kind) noexcept;

/// Domain error raised by the engine. The kind's name is what the CLI
/// prints on stderr, so it must stay stable.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace census
