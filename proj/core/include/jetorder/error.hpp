#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace jetorder {

enum class ErrorCode {
  DimensionMismatch,
  MalformedRational,
  NegativeExponent,
  DuplicateMonomial,
  DependentBasis,
  EmptyBasis,
  MalformedDocument,
  DegeneratePolytope,
  NonSmooth,
  NonSaturated,
  FaceNotFound,
  DomainError,
  Internal,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries a stable code; the CLI maps
/// all of them to exit status 2.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace jetorder
