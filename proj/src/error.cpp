#include "specfact/error.hpp"

namespace specfact {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotReal: return "NotReal";
    case ErrorCode::NotNonnegative: return "NotNonnegative";
    case ErrorCode::DegenerateLeadingCoeff: return "DegenerateLeadingCoeff";
    case ErrorCode::AllCoefficientsZero: return "AllCoefficientsZero";
    case ErrorCode::ZeroFunction: return "ZeroFunction";
    case ErrorCode::SpectrumNotOneSided: return "SpectrumNotOneSided";
    case ErrorCode::OrderCollision: return "OrderCollision";
    case ErrorCode::OddBoundaryCluster: return "OddBoundaryCluster";
    case ErrorCode::UnbalancedRootSplit: return "UnbalancedRootSplit";
    case ErrorCode::NonpolynomialInner: return "NonpolynomialInner";
    case ErrorCode::NonpositiveStage: return "NonpositiveStage";
    case ErrorCode::GridTooCoarse: return "GridTooCoarse";
    case ErrorCode::LogSingular: return "LogSingular";
    case ErrorCode::SingularToeplitz: return "SingularToeplitz";
    case ErrorCode::ZeroOnContour: return "ZeroOnContour";
    case ErrorCode::TypeMismatch: return "TypeMismatch";
  }
  return "Unknown";
}

bool is_validation(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::ParseError:
    case ErrorCode::NotReal:
    case ErrorCode::NotNonnegative:
    case ErrorCode::DegenerateLeadingCoeff:
    case ErrorCode::AllCoefficientsZero:
    case ErrorCode::ZeroFunction:
    case ErrorCode::SpectrumNotOneSided:
    case ErrorCode::OrderCollision:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

}  // namespace specfact
