#pragma once

#include <stdexcept>

namespace iq {

/// Malformed or out-of-range user input.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A configured cap or work limit was exceeded. The computation is well
/// defined and would terminate; it was deliberately not carried out.
struct resource_limit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An internal cross-check failed. Always a bug, never a property of the input.
struct soundness_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace iq
