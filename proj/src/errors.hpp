#pragma once

#include <stdexcept>

namespace homs {

// Thrown when a solver fails its accuracy contract (singular Liouvillian,
// residual above tolerance), as opposed to invalid user input which is
// reported via std::invalid_argument.
class numerical_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace homs
