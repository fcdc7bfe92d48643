#include "facering/errors.hpp"

namespace facering {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyComplex: return "EmptyComplex";
    case ErrorCode::GhostVertex: return "GhostVertex";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::TooManyVertices: return "TooManyVertices";
    case ErrorCode::SizeOutOfRange: return "SizeOutOfRange";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::NotAFace: return "NotAFace";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidQuery: return "InvalidQuery";
    case ErrorCode::SubsetBlowup: return "SubsetBlowup";
    case ErrorCode::NotCohenMacaulay: return "NotCohenMacaulay";
    case ErrorCode::MissingAInvariant: return "MissingAInvariant";
    case ErrorCode::MissingAInvariantData: return "MissingAInvariantData";
    case ErrorCode::BelowValidityThreshold: return "BelowValidityThreshold";
    case ErrorCode::FitMismatch: return "FitMismatch";
    case ErrorCode::DuplicateAbscissa: return "DuplicateAbscissa";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

ParseError::ParseError(std::size_t line, std::size_t column,
                       const std::string& reason)
    : Error(ErrorCode::ParseError,
            std::to_string(line) + ":" + std::to_string(column) + ": " + reason),
      line_(line),
      column_(column) {}

}  // namespace facering
