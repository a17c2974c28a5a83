#include "mps/error.hpp"

namespace mps {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IncompatibleTables: return "IncompatibleTables";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::ExponentOverflow: return "ExponentOverflow";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::NegativeExponent: return "NegativeExponent";
    case ErrorKind::NonIntegerExponent: return "NonIntegerExponent";
    case ErrorKind::PrimesOverflow: return "PrimesOverflow";
    case ErrorKind::MissingKey: return "MissingKey";
    case ErrorKind::DuplicateKey: return "DuplicateKey";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::QuotientByZeroIdeal: return "QuotientByZeroIdeal";
    case ErrorKind::NotAGermAtOrigin: return "NotAGermAtOrigin";
    case ErrorKind::ConstructionCheckFailed: return "ConstructionCheckFailed";
    case ErrorKind::NotAdaptedForm: return "NotAdaptedForm";
    case ErrorKind::NoParameters: return "NoParameters";
    case ErrorKind::CorankUndefined: return "CorankUndefined";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

bool is_input_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnknownVariable:
    case ErrorKind::SyntaxError:
    case ErrorKind::NegativeExponent:
    case ErrorKind::NonIntegerExponent:
    case ErrorKind::MissingKey:
    case ErrorKind::DuplicateKey:
    case ErrorKind::ParseError:
    case ErrorKind::IoError:
    case ErrorKind::InvalidArgument:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(message), kind_(kind) {}

Error Error::at_position(ErrorKind kind, const std::string& message, std::size_t position) {
  Error e(kind, message + " (at position " + std::to_string(position) + ")");
  e.position_ = position;
  return e;
}

Error Error::at_line(ErrorKind kind, const std::string& message, std::size_t line) {
  Error e(kind, "line " + std::to_string(line) + ": " + message);
  e.line_ = line;
  return e;
}

Error Error::with_line(std::size_t line) const {
  Error e = at_line(kind_, what(), line);
  e.position_ = position_;
  return e;
}

}  // namespace mps
