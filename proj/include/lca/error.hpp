#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lca {

/// Value outside its permitted range (e.g. a rule number above 511).
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operands whose sizes do not agree.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Requested grid or matrix exceeds the supported size.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Malformed text input. line() is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace lca
