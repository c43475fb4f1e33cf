#include "pcmrank/error.hpp"

#include <limits>

namespace pcmrank {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NonPositiveEntry: return "NonPositiveEntry";
    case ErrorCode::ReciprocityViolation: return "ReciprocityViolation";
    case ErrorCode::DiagonalViolation: return "DiagonalViolation";
    case ErrorCode::WrongLength: return "WrongLength";
    case ErrorCode::BadIndices: return "BadIndices";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::BadPermutation: return "BadPermutation";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::UnknownRanking: return "UnknownRanking";
    case ErrorCode::CTOnRanking: return "CTOnRanking";
    case ErrorCode::BadSpec: return "BadSpec";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "UnknownError";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message),
      code_(code),
      value_(std::numeric_limits<double>::quiet_NaN()) {}

Error::Error(ErrorCode code, const std::string& message, std::size_t row, std::size_t col,
             double value)
    : std::runtime_error(message), code_(code), row_(row), col_(col), value_(value) {}

}  // namespace pcmrank
