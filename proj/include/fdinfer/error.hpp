#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fdinfer {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad identifiers, empty FD sides, attributes outside the universe.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Store consistency violations (dangling parents, cyclic provenance).
class IntegrityError : public Error {
 public:
  using Error::Error;
};

class LookupError : public Error {
 public:
  using Error::Error;
};

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

}  // namespace fdinfer
