#include "abq/error.hpp"

namespace abq {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidShape: return "InvalidShape";
    case ErrorKind::EntryOutOfRange: return "EntryOutOfRange";
    case ErrorKind::NotAPermutation: return "NotAPermutation";
    case ErrorKind::NotIdempotent: return "NotIdempotent";
    case ErrorKind::NotSelfDistributive: return "NotSelfDistributive";
    case ErrorKind::NotTwoReductive: return "NotTwoReductive";
    case ErrorKind::FreenessViolated: return "FreenessViolated";
    case ErrorKind::NotAbelian: return "NotAbelian";
    case ErrorKind::SizeTooLarge: return "SizeTooLarge";
    case ErrorKind::ShapeError: return "ShapeError";
    case ErrorKind::InvalidParameters: return "InvalidParameters";
    case ErrorKind::WrongOrbitCount: return "WrongOrbitCount";
    case ErrorKind::NotDiagonal: return "NotDiagonal";
    case ErrorKind::CriterionMismatch: return "CriterionMismatch";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace abq
