#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace freediv {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different rings, vectors have the wrong rank, etc.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Malformed polynomial/operator/config text. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// The input violates the precondition of a criterion (e.g. a non-isolated singular locus).
class InapplicableError : public Error {
 public:
  using Error::Error;
};

/// The defining polynomial has a repeated factor.
class SquarefreeError : public Error {
 public:
  using Error::Error;
};

/// A vector field that was required to be logarithmic is not.
class NotLogarithmicError : public Error {
 public:
  using Error::Error;
};

/// A bracket of two generators is not expressible in the generators.
class LieClosureError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed; this is a bug, not bad input.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace freediv
