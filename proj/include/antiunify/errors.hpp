#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace antiunify {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed goal text. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A predicate name used with two different arities under strict parsing.
class ArityConflict : public Error {
 public:
  using Error::Error;
};

/// Two goals handed to a pairwise operation are not renamed apart.
class SharedVariables : public Error {
 public:
  using Error::Error;
};

/// An exponential oracle was asked to solve an instance above its size bound.
class InstanceTooLarge : public Error {
 public:
  using Error::Error;
};

class InvalidIdentifier : public Error {
 public:
  using Error::Error;
};

class InvalidConfig : public Error {
 public:
  using Error::Error;
};

}  // namespace antiunify
