#pragma once

#include <stdexcept>

namespace geomgroup {

/// Malformed blade literal or generator token.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operands constructed at different dimensions were combined.
struct dimension_mismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Broken internal invariant (e.g. a closure whose order is not a power of
/// two).  Reaching this is a bug in the library, not bad user input.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace geomgroup
