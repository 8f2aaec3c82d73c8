#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fq {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A name that is neither a chart coordinate nor a declared parameter.
class UnknownSymbolError : public Error {
 public:
  explicit UnknownSymbolError(const std::string& name)
      : Error("unknown symbol '" + name + "'"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// Syntax error in an expression or model file. Line and column are 1-based;
/// a line of 0 means the position is relative to a single expression string.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(format(message, line, column)), line_(line), column_(column), message_(message) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  static std::string format(const std::string& m, std::size_t line, std::size_t column) {
    if (line == 0) return "column " + std::to_string(column) + ": " + m;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + m;
  }
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

class DivisionByZeroError : public Error {
 public:
  using Error::Error;
};

/// A structure that violates a defining invariant (non-closed or singular
/// symplectic form, bivector of dropping rank, ...).
class DegenerateStructureError : public Error {
 public:
  using Error::Error;
};

/// Precondition violation of a geometric operation, e.g. contracting a leafwise
/// form with a vector field that is not tangent to the foliation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Raised when a decision is required but the zero test could not decide.
class InconclusiveError : public Error {
 public:
  using Error::Error;
};

}  // namespace fq
