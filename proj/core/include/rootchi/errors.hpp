#pragma once

#include <stdexcept>
#include <string>

namespace rootchi {

// Malformed textual input (PD codes, braid words, polynomials, JSON).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A structural invariant of a value was violated (bad degrees, d^2 != 0, ...).
class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Division with nonzero remainder.
class NotDivisible : public InvariantError {
 public:
  using InvariantError::InvariantError;
};

// Configured computation bound exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rootchi
