#pragma once

#include <stdexcept>
#include <string>

namespace bullfree {

// Each error category maps to one CLI exit code (see tools/).

/// A caller violated an operation's precondition (bad vertex id, bad parameter).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed input text. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Instance exceeds a desk-scale guard (see capacity.hpp) or an integer range.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A proven invariant failed at runtime. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace bullfree
