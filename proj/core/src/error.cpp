#include "kgraph/error.hpp"

namespace kgraph {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidRank: return "InvalidRank";
    case ErrorCode::InvalidColor: return "InvalidColor";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::DanglingEndpoint: return "DanglingEndpoint";
    case ErrorCode::SquareEndpointMismatch: return "SquareEndpointMismatch";
    case ErrorCode::SquareNotBijective: return "SquareNotBijective";
    case ErrorCode::AssociativityViolation: return "AssociativityViolation";
    case ErrorCode::NotComposable: return "NotComposable";
    case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::UnknownId: return "UnknownId";
    case ErrorCode::GraphMismatch: return "GraphMismatch";
    case ErrorCode::NotATFamily: return "NotATFamily";
    case ErrorCode::NotAnInvariantFamily: return "NotAnInvariantFamily";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::NotInLattice: return "NotInLattice";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::InternalValidationFailure: return "InternalValidationFailure";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::VersionUnsupported: return "VersionUnsupported";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message,
             std::vector<std::string> subjects)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      subjects_(std::move(subjects)) {}

Error Error::at(ErrorCode code, const std::string& message, std::size_t line,
                std::size_t column) {
  Error e(code, message + " (line " + std::to_string(line) + ", column " +
                    std::to_string(column) + ")");
  e.line_ = line;
  e.column_ = column;
  return e;
}

}  // namespace kgraph
