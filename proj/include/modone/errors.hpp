#pragma once

#include <stdexcept>

namespace modone {

// Lattice enumeration would have to scan more cells than the configured budget.
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A term of a sum is singular, e.g. ||m*alpha|| = 0 for rational alpha.
struct SingularInputError : std::domain_error {
  using std::domain_error::domain_error;
};

// A numerical decomposition failed (singular or non-finite input).
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace modone
