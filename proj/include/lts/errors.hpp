#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace lts {

enum class ErrorCode {
  VertexOutOfRange,
  DegenerateTriple,
  DuplicatePairCoverage,
  SameVertex,
  ModeTooLarge,
  TooLarge,
  BudgetExceeded,
  EvenModulus,
  ModulusTooSmall,
  NotOddPrime,
  KeepIndexOutOfRange,
  OrderTooSmall,
  OrderOutOfRange,
  ModulusMismatch,
  EmptyOperand,
  OutOfRange,
  SyntaxError,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library. The code identifies the contract
// violation; `pair()` is set for DuplicatePairCoverage and `line()` for
// errors raised while parsing a system file.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  // Message without the error-code prefix.
  const std::string& detail() const noexcept { return detail_; }

  const std::optional<std::pair<std::uint32_t, std::uint32_t>>& pair() const noexcept {
    return pair_;
  }
  const std::optional<std::size_t>& line() const noexcept { return line_; }

  Error& with_pair(std::uint32_t x, std::uint32_t y) {
    pair_ = std::make_pair(x, y);
    return *this;
  }
  Error& with_line(std::size_t line) {
    line_ = line;
    return *this;
  }

  // True for the errors that mean "the input is not a valid linear triple system".
  bool is_validation_error() const noexcept;

 private:
  ErrorCode code_;
  std::string detail_;
  std::optional<std::pair<std::uint32_t, std::uint32_t>> pair_;
  std::optional<std::size_t> line_;
};

}  // namespace lts
