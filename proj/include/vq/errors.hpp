#pragma once

#include <stdexcept>
#include <string>

namespace vq {

// Problem exceeds the desk-scale limits a routine was written for.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Index or parameter outside its admissible range.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Coincident abscissae, zero pivots, non-invertible K_3 and friends.
class SingularError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Two independent constructions of the same object disagree.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A floating-point evaluation left its acceptance band.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid operator/space configuration or carrier mismatch.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace vq
