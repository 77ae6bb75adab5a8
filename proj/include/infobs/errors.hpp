#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace infobs {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed arguments: unknown states or events, mismatched alphabets.
class InputError : public Error {
 public:
  using Error::Error;
};

// Malformed automaton or mask text. line() is 1-based, 0 if not tied to a line.
class FormatError : public InputError {
 public:
  FormatError(const std::string& what, std::size_t line = 0)
      : InputError(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A construction would exceed its configured state or word budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace infobs
