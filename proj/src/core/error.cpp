#include "cwpower/error.hpp"

namespace cwp {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotInPowerSubring: return "NotInPowerSubring";
    case ErrorCode::CoordinateHyperplaneComponent: return "CoordinateHyperplaneComponent";
    case ErrorCode::UndefinedDual: return "UndefinedDual";
    case ErrorCode::ForbiddenExponent: return "ForbiddenExponent";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::UnsupportedSize: return "UnsupportedSize";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::InternalClassificationError: return "InternalClassificationError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace cwp
