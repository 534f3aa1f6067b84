#include "lts/errors.hpp"

namespace lts {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::DegenerateTriple: return "DegenerateTriple";
    case ErrorCode::DuplicatePairCoverage: return "DuplicatePairCoverage";
    case ErrorCode::SameVertex: return "SameVertex";
    case ErrorCode::ModeTooLarge: return "ModeTooLarge";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::EvenModulus: return "EvenModulus";
    case ErrorCode::ModulusTooSmall: return "ModulusTooSmall";
    case ErrorCode::NotOddPrime: return "NotOddPrime";
    case ErrorCode::KeepIndexOutOfRange: return "KeepIndexOutOfRange";
    case ErrorCode::OrderTooSmall: return "OrderTooSmall";
    case ErrorCode::OrderOutOfRange: return "OrderOutOfRange";
    case ErrorCode::ModulusMismatch: return "ModulusMismatch";
    case ErrorCode::EmptyOperand: return "EmptyOperand";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::SyntaxError: return "SyntaxError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), detail_(message) {}

bool Error::is_validation_error() const noexcept {
  switch (code_) {
    case ErrorCode::VertexOutOfRange:
    case ErrorCode::DegenerateTriple:
    case ErrorCode::DuplicatePairCoverage:
    case ErrorCode::SyntaxError:
      return true;
    default:
      return false;
  }
}

}  // namespace lts
