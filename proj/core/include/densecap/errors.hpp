#pragma once

#include <stdexcept>

namespace densecap {

// Mismatched or unsupported operand dimensions.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Input violates a state or ensemble invariant (Hermiticity, trace,
// positivity, probability normalization, ...). The message names the
// violated invariant.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A numerical procedure failed to converge or an internal consistency
// check tripped.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed serialized input (JSON syntax or schema).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace densecap
