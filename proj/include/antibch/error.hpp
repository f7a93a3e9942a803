#pragma once

#include <stdexcept>
#include <string>

namespace antibch {

enum class ErrorCode {
  NotPrime,
  DegreeZero,
  FieldTooLarge,
  NotDivisor,
  NotSubfield,
  CoefficientNotInSubfield,
  DeltaOutOfRange,
  ZeroConstantTerm,
  BudgetExceeded,
  OutOfRange,
  Unsupported,
  RangeUnsupported,
  HypothesisNotMet,
  NotFound,
  RootCheckFailed,
  ROutOfRange,
  RepeatedValue,
  InvalidArgument,
  Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace antibch
