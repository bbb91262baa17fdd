#pragma once

#include <stdexcept>

namespace ldcma {

/// Invalid input: bad arguments, malformed files, unknown configuration keys.
struct SpecError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Numerical failure: oracle disagreement, non-finite values, guard overflow.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ldcma
