#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace adq {

enum class ErrorCode {
  NotPrime,
  CapExceeded,
  IncompatibleDegrees,
  IncompatibleFields,
  ZeroPolynomial,
  DimensionMismatch,
  NotSquare,
  NotAnEigenvalue,
  FieldTooSmall,
  OrderCapExceeded,
  NotInvertible,
  SeedExhausted,
  ZeroVector,
  NotSemisimple,
  CriterionMismatch,
  InternalMismatch,
  NotNilpotentToOrderL,
  NotUnipotentToOrderL,
  BoxOverflow,
  InvalidArgument,
  ParseError,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace adq
