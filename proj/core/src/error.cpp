#include "relpat/error.hpp"

namespace relpat {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidPattern: return "InvalidPattern";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DuplicateVariable: return "DuplicateVariable";
    case ErrorKind::UnknownSymbolInPairs: return "UnknownSymbolInPairs";
    case ErrorKind::NotReversalFriendly: return "NotReversalFriendly";
    case ErrorKind::UnknownGroup: return "UnknownGroup";
    case ErrorKind::WrongKind: return "WrongKind";
    case ErrorKind::NonBinaryAlphabet: return "NonBinaryAlphabet";
    case ErrorKind::MissingVariable: return "MissingVariable";
    case ErrorKind::GroupTooLarge: return "GroupTooLarge";
    case ErrorKind::ZeroGenerator: return "ZeroGenerator";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::AlphabetTooSmall: return "AlphabetTooSmall";
    case ErrorKind::NotP23: return "NotP23";
    case ErrorKind::UnambiguityCheckFailed: return "UnambiguityCheckFailed";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::WitnessNotFoundWithinBound: return "WitnessNotFoundWithinBound";
    case ErrorKind::NegativeLabelPresent: return "NegativeLabelPresent";
    case ErrorKind::MissingImage: return "MissingImage";
    case ErrorKind::NotTerminalFree: return "NotTerminalFree";
    case ErrorKind::NotRepresentable: return "NotRepresentable";
    case ErrorKind::NotAMember: return "NotAMember";
    case ErrorKind::InvalidDecomposition: return "InvalidDecomposition";
    case ErrorKind::EmptyConstruction: return "EmptyConstruction";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(message), kind_(kind) {}

ParseError::ParseError(std::size_t line, std::size_t column,
                       const std::string& message)
    : ParseError(ErrorKind::ParseError, line, column, message) {}

ParseError::ParseError(ErrorKind kind, std::size_t line, std::size_t column,
                       const std::string& message)
    : Error(kind, std::to_string(line) + ":" + std::to_string(column) + ": " +
                      message),
      line_(line),
      column_(column),
      detail_(message) {}

}  // namespace relpat
