#include "jetorder/error.hpp"

namespace jetorder {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "dimension-mismatch";
    case ErrorCode::MalformedRational: return "malformed-rational";
    case ErrorCode::NegativeExponent: return "negative-exponent";
    case ErrorCode::DuplicateMonomial: return "duplicate-monomial";
    case ErrorCode::DependentBasis: return "dependent-basis";
    case ErrorCode::EmptyBasis: return "empty-basis";
    case ErrorCode::MalformedDocument: return "malformed-document";
    case ErrorCode::DegeneratePolytope: return "degenerate-polytope";
    case ErrorCode::NonSmooth: return "non-smooth";
    case ErrorCode::NonSaturated: return "non-saturated";
    case ErrorCode::FaceNotFound: return "face-not-found";
    case ErrorCode::DomainError: return "domain-error";
    case ErrorCode::Internal: return "internal";
  }
  return "unknown";
}

}  // namespace jetorder
