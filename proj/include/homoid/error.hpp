#pragma once

#include <stdexcept>
#include <string>

namespace homoid {

// Base of everything the engine throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: syntax errors, unknown symbols, inhomogeneous relations,
// bad preset parameters, mismatched presentations.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public ValidationError {
 public:
  ParseError(std::string const& msg, std::size_t line, std::size_t column)
      : ValidationError("line " + std::to_string(line) + ", column "
                        + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// A configured limit (degree cap, word budget, subset budget) was hit.
// Results are never silently truncated; the caller gets this instead.
class LimitError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace homoid
