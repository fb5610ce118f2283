#pragma once

#include <stdexcept>
#include <string>

namespace ibham {

// Bad input data: invalid distributions, dimension mismatches, out-of-range
// arguments. Maps to CLI exit code 2.
class validation_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The requested quantity does not exist for these parameters (extreme
// crossover probability, or n = 2 where the curve is concave). Exit code 3.
class regime_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A verify run was requested outside the rate interval where the cardinality
// claim applies. Exit code 4.
class tightness_regime_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Internal numerical failure: a root could not be bracketed, a residual
// check failed. Exit code 5.
class numeric_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ibham
