#pragma once

#include <stdexcept>

namespace macexp {

// Channel table has no single-noise additive representation.
struct not_additive_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Virtual channel noise failed the dither-independence certificate.
struct independence_violation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct non_prime_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Exhaustive enumeration would exceed the configured size guard.
struct too_large_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct zero_capacity_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace macexp
