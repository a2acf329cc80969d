#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace degex {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad input: malformed arguments, out-of-range vertices, invalid edges.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A textual input failed to parse. `line()` is 1-based.
class ParseError : public ValidationError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : ValidationError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An exact quantity does not fit the bounded-width backend.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A computation was refused because it would exceed a configured
/// enumeration budget or exact-size limit.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace degex
