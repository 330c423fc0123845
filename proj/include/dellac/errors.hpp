#pragma once

#include <stdexcept>
#include <string>

namespace dellac {

/// Input is malformed before any invariant can be checked (wrong length,
/// entries out of range).
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input is well formed but lies outside the domain of an operation
/// (non-symmetric configuration given to inv_tilde, parity mismatch, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Two computations that must agree did not. Never expected on valid input.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Text input could not be parsed. Carries a 1-based line and column.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace dellac
