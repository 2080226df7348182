#include "census/error.hpp"

namespace census {

std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::SubstitutionToZeroPole: return "SubstitutionToZeroPole";
    case ErrorKind::PoleAtPoint: return "PoleAtPoint";
    case ErrorKind::PoleArgument: return "PoleArgument";
    case ErrorKind::NotUnitConstantTerm: return "NotUnitConstantTerm";
    case ErrorKind::NotAugmented: return "NotAugmented";
    case ErrorKind::NotWeil: return "NotWeil";
    case ErrorKind::HigherOrderPole: return "HigherOrderPole";
    case ErrorKind::NotPolynomialAfterClearing: return "NotPolynomialAfterClearing";
    case ErrorKind::NegativeBettiCoefficient: return "NegativeBettiCoefficient";
    case ErrorKind::RoundingFailure: return "RoundingFailure";
    case ErrorKind::IdentityViolation: return "IdentityViolation";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UsageError: return "UsageError";
  }
  return "UnknownError";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(error_name(kind)) + ": " + detail), kind_(kind) {}

}  // namespace census
