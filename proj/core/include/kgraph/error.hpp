#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kgraph {

enum class ErrorCode {
  // Graph validation.
  InvalidRank,
  InvalidColor,
  DuplicateId,
  DanglingEndpoint,
  SquareEndpointMismatch,
  SquareNotBijective,
  AssociativityViolation,
  // Path algebra.
  NotComposable,
  DegreeOutOfRange,
  UnknownId,
  // Families and lattices.
  GraphMismatch,
  NotATFamily,
  NotAnInvariantFamily,
  KindMismatch,
  NotInLattice,
  BudgetExceeded,
  // Extended graph construction; never raised for well-formed input.
  InternalValidationFailure,
  // File formats.
  SyntaxError,
  SchemaError,
  VersionUnsupported,
};

std::string_view to_string(ErrorCode code) noexcept;

/// The single exception type raised by the library.
///
/// `subjects()` carries the offending ids where an error is about specific
/// graph elements (an unmatched edge pair, a non-associative triple, a
/// duplicated id, the schema field that failed). Parse errors additionally
/// carry a 1-based line and column.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::vector<std::string> subjects = {});

  static Error at(ErrorCode code, const std::string& message, std::size_t line,
                  std::size_t column);

  ErrorCode code() const noexcept { return code_; }
  const std::vector<std::string>& subjects() const noexcept { return subjects_; }
  std::optional<std::size_t> line() const noexcept { return line_; }
  std::optional<std::size_t> column() const noexcept { return column_; }

 private:
  ErrorCode code_;
  std::vector<std::string> subjects_;
  std::optional<std::size_t> line_;
  std::optional<std::size_t> column_;
};

}  // namespace kgraph
