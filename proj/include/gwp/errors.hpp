#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gwp {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

/// Malformed graph text or element expression. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const char* kind() const noexcept override { return "parse_error"; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A value of the wrong shape was passed to an operation: a non-loop where a
/// loop is required, words from two different graphs, and so on.
class PreconditionError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "precondition"; }
};

/// Fock evaluation would need basis vectors longer than the truncation depth.
class DepthError : public Error {
 public:
  DepthError(std::size_t required, std::size_t available)
      : Error("fock depth " + std::to_string(available) +
              " is insufficient; required depth is " +
              std::to_string(required)),
        required_(required),
        available_(available) {}

  std::size_t required() const noexcept { return required_; }
  std::size_t available() const noexcept { return available_; }
  const char* kind() const noexcept override { return "depth"; }

 private:
  std::size_t required_;
  std::size_t available_;
};

/// An arity or order exceeds the configured combinatorial bound.
class BoundError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "bound"; }
};

}  // namespace gwp
