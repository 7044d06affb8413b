#pragma once

#include <stdexcept>
#include <string>

namespace spgauge {

// A caller violated a documented precondition (m >= n, empty input, an
// unsupported mode/argument combination). Front ends map this to a usage
// error.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// An internal identity failed to hold: a value that must be an integer was
// not, an oracle division was inexact, a generator that must be nonzero was
// zero. Never expected for valid input.
class ConsistencyError : public std::logic_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace spgauge
