#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rbd {

enum class ErrorCode {
  InvalidArgument,
  SingularMatrix,
  NotSymmetric,
  ZeroPolynomial,
  InvalidFraction,
  InvalidPQ,
  NonIsolatedFixedLocus,
  SmoothInput,
  NotTType,
  SyntaxError,
  DuplicateId,
  UnknownId,
  BadWeight,
  NotLinearChain,
  NotAllRational,
  WeightOutOfRange,
  MixedSurfaces,
  NonIntegralGenus,
  IneffectiveBranch,
  MeetsBranch,
  InsufficientNegativePart,
  OutOfRange,
  SingularPoint,
  IrreducibleFactor,
  NonIntegerResult,
  NonIntegralLefschetz,
  NotClassT,
  ConsistencyFailure,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code), detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  // The message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

private:
  ErrorCode code_;
  std::string detail_;
};

// Failure tied to a 1-based line and column of parsed input.
class SourceError : public Error {
public:
  SourceError(ErrorCode code, std::size_t line, std::size_t column, const std::string& detail)
      : Error(code, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + detail),
        line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

class SyntaxError : public SourceError {
public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& detail)
      : SourceError(ErrorCode::SyntaxError, line, column, detail) {}
};

}  // namespace rbd
