#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mps {

enum class ErrorKind {
  IncompatibleTables,
  NotDivisible,
  DivisionByZero,
  UnknownVariable,
  ExponentOverflow,
  SyntaxError,
  NegativeExponent,
  NonIntegerExponent,
  PrimesOverflow,
  MissingKey,
  DuplicateKey,
  ParseError,
  IoError,
  QuotientByZeroIdeal,
  NotAGermAtOrigin,
  ConstructionCheckFailed,
  NotAdaptedForm,
  NoParameters,
  CorankUndefined,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// True for errors caused by malformed input text or files (CLI exit code 2);
/// everything else is a domain error (exit code 1).
bool is_input_error(ErrorKind kind);

/// Library-wide exception. Parser errors carry a character position (0-based
/// within the parsed text) and file errors a line number (1-based).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  static Error at_position(ErrorKind kind, const std::string& message, std::size_t position);
  static Error at_line(ErrorKind kind, const std::string& message, std::size_t line);

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> position() const noexcept { return position_; }
  std::optional<std::size_t> line() const noexcept { return line_; }

  Error with_line(std::size_t line) const;

 private:
  ErrorKind kind_;
  std::optional<std::size_t> position_;
  std::optional<std::size_t> line_;
};

}  // namespace mps
