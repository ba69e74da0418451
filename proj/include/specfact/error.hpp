#ifndef SPECFACT_ERROR_HPP
#define SPECFACT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace specfact {

/// Failure conditions raised by the factorization routines.
///
/// The first group are input validation failures (bad data or bad
/// configuration); the rest are numerical failures on otherwise valid input.
enum class ErrorCode {
  // validation
  InvalidArgument,
  ParseError,
  NotReal,
  NotNonnegative,
  DegenerateLeadingCoeff,
  AllCoefficientsZero,
  ZeroFunction,
  SpectrumNotOneSided,
  OrderCollision,
  // numerical
  OddBoundaryCluster,
  UnbalancedRootSplit,
  NonpolynomialInner,
  NonpositiveStage,
  GridTooCoarse,
  LogSingular,
  SingularToeplitz,
  ZeroOnContour,
  TypeMismatch,
};

std::string_view error_name(ErrorCode code) noexcept;

/// True for codes that indicate rejected input rather than a numerical failure.
bool is_validation(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace specfact

#endif  // SPECFACT_ERROR_HPP
