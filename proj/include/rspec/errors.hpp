#pragma once

#include <stdexcept>
#include <string>

namespace rspec {

// Shape mismatch between operands (non-square input, wrong vector length, ...).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input violates a mathematical precondition (non-unimodular matrix,
// singular matrix where a finite index is needed, unsupported rank/class).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Text could not be parsed (matrix, bracket or element formats).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured enumeration or oracle bound was exceeded.
class BoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Something that exact arithmetic guarantees did not happen. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace rspec
