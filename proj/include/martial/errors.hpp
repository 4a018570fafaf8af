#pragma once

#include <stdexcept>
#include <string>

namespace martial {

/// Malformed or out-of-contract input (bad permutation text, window too small, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal identity that must hold did not. Always a bug or a broken theorem.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace martial
