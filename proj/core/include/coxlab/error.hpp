#pragma once

#include <stdexcept>
#include <string>

namespace coxlab {

/// Base class for every error raised by the library on bad input.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// DSL or JSON text that could not be read. Positions are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// Structurally invalid object (not a Coxeter matrix, not a Cartan matrix,
/// open polytope surface, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Well-formed input outside an operation's domain (wrong rank, reducible
/// block, refused rendering, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Two independent computations that must agree did not. Never expected.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace coxlab
