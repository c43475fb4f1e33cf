#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pcmrank {

enum class ErrorCode {
  NotSquare,
  NonPositiveEntry,
  ReciprocityViolation,
  DiagonalViolation,
  WrongLength,
  BadIndices,
  TooSmall,
  BadPermutation,
  DomainError,
  UnknownRanking,
  CTOnRanking,
  BadSpec,
  ParseError,
  IoError,
};

std::string_view to_string(ErrorCode code);

/// Library-wide exception. `row`/`col` are 0-based entry coordinates when the
/// error refers to a matrix position (npos otherwise); `value` carries the
/// offending quantity, e.g. the reciprocity product (NaN otherwise).
/// Messages render positions 1-based, matching all human-facing output.
class Error : public std::runtime_error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Error(ErrorCode code, const std::string& message);
  Error(ErrorCode code, const std::string& message, std::size_t row, std::size_t col,
        double value);

  ErrorCode code() const noexcept { return code_; }
  std::size_t row() const noexcept { return row_; }
  std::size_t col() const noexcept { return col_; }
  double value() const noexcept { return value_; }

 private:
  ErrorCode code_;
  std::size_t row_ = npos;
  std::size_t col_ = npos;
  double value_;
};

}  // namespace pcmrank
