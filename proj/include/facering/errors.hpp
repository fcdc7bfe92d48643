#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace facering {

enum class ErrorCode {
  EmptyComplex,
  GhostVertex,
  DuplicateLabel,
  TooManyVertices,
  SizeOutOfRange,
  InvalidGraph,
  NotAFace,
  InvalidArgument,
  InvalidQuery,
  SubsetBlowup,
  NotCohenMacaulay,
  MissingAInvariant,
  MissingAInvariantData,
  BelowValidityThreshold,
  FitMismatch,
  DuplicateAbscissa,
  BudgetExceeded,
  ParseError,
  ValidationError,
};

std::string_view to_string(ErrorCode code);

/// Every library failure carries a machine-readable code; the CLI maps codes
/// onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& reason);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace facering
