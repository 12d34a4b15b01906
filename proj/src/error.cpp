#include "tropical/error.hpp"

namespace tropical {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::NotSublattice: return "NotSublattice";
    case ErrorCode::RankGapNotOne: return "RankGapNotOne";
    case ErrorCode::DirectionInTau: return "DirectionInTau";
    case ErrorCode::BadCodim: return "BadCodim";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::DimMismatch: return "DimMismatch";
    case ErrorCode::ZeroForm: return "ZeroForm";
    case ErrorCode::NotZeroDimensional: return "NotZeroDimensional";
    case ErrorCode::NotFan: return "NotFan";
    case ErrorCode::SupportNotCovered: return "SupportNotCovered";
    case ErrorCode::InvalidCycle: return "InvalidCycle";
    case ErrorCode::NonIntegralMatrix: return "NonIntegralMatrix";
    case ErrorCode::NonIntegralWeight: return "NonIntegralWeight";
    case ErrorCode::ZeroShift: return "ZeroShift";
    case ErrorCode::NotSimplicial: return "NotSimplicial";
    case ErrorCode::NotComplete: return "NotComplete";
    case ErrorCode::DimensionsNotComplementary: return "DimensionsNotComplementary";
    case ErrorCode::NotPlanar: return "NotPlanar";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::InvalidFunction: return "InvalidFunction";
  }
  return "Unknown";
}

}  // namespace tropical
