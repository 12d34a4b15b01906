#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tropical {

enum class ErrorCode {
  ZeroVector,
  RankMismatch,
  NotSublattice,
  RankGapNotOne,
  DirectionInTau,
  BadCodim,
  EmptyInput,
  DimMismatch,
  ZeroForm,
  NotZeroDimensional,
  NotFan,
  SupportNotCovered,
  InvalidCycle,
  NonIntegralMatrix,
  NonIntegralWeight,
  ZeroShift,
  NotSimplicial,
  NotComplete,
  DimensionsNotComplementary,
  NotPlanar,
  SchemaError,
  ValidationError,
  InvalidFunction,
};

std::string_view error_name(ErrorCode code);

/// Every precondition failure in the library is reported as a TropicalError
/// carrying one of the codes above.
class TropicalError : public std::runtime_error {
 public:
  TropicalError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tropical
