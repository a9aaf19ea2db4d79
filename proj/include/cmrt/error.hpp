#pragma once

#include <stdexcept>
#include <string>

namespace cmrt {

/// Malformed or out-of-contract input. Maps to CLI exit code 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A required externally asserted value (Δ, D(g), ...) was not supplied.
class MissingInputError : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace cmrt
