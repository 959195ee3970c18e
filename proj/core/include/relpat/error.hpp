#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace relpat {

enum class ErrorKind {
  InvalidPattern,
  ParseError,
  DuplicateVariable,
  UnknownSymbolInPairs,
  NotReversalFriendly,
  UnknownGroup,
  WrongKind,
  NonBinaryAlphabet,
  MissingVariable,
  GroupTooLarge,
  ZeroGenerator,
  DimensionMismatch,
  InstanceTooLarge,
  BudgetExceeded,
  AlphabetTooSmall,
  NotP23,
  UnambiguityCheckFailed,
  PreconditionViolated,
  WitnessNotFoundWithinBound,
  NegativeLabelPresent,
  MissingImage,
  NotTerminalFree,
  NotRepresentable,
  NotAMember,
  InvalidDecomposition,
  EmptyConstruction,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Positioned error from the pattern-file and word-literal readers.
/// Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  ParseError(ErrorKind kind, std::size_t line, std::size_t column,
             const std::string& message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
};

}  // namespace relpat
