#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace abq {

enum class ErrorKind {
  InvalidShape,
  EntryOutOfRange,
  NotAPermutation,
  NotIdempotent,
  NotSelfDistributive,
  NotTwoReductive,
  FreenessViolated,
  NotAbelian,
  SizeTooLarge,
  ShapeError,
  InvalidParameters,
  WrongOrbitCount,
  NotDiagonal,
  CriterionMismatch,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure in the toolkit is reported through this type. `witness` holds
// the offending indices (column, element, triple...) in the order the message
// names them.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string const& message,
        std::vector<std::int64_t> witness = {})
      : std::runtime_error(message), kind_(kind), witness_(std::move(witness)) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }
  [[nodiscard]] std::vector<std::int64_t> const& witness() const noexcept {
    return witness_;
  }

 private:
  ErrorKind kind_;
  std::vector<std::int64_t> witness_;
};

}  // namespace abq
