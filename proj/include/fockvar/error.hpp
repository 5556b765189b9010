#pragma once

#include <stdexcept>
#include <string>

namespace fockvar {

// Malformed or out-of-contract input: bad exponent bounds, unparsable
// expressions, violated preconditions. The CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computation that could not meet its tolerance: quadrature budget
// exhausted, norm bracket not found, overflow. Exit code 3.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Runtime failure while evaluating an exponent expression (division by zero,
// log of a non-positive value).
class EvaluationError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace fockvar
