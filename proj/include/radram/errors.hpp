#pragma once

#include <stdexcept>

namespace radram {

// Bad arguments are reported with std::invalid_argument. The three classes
// below cover the remaining failure kinds surfaced by the library.

/// Input lies outside what the library handles (p = 2, moduli beyond 62 bits).
class unsupported_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A brute-force oracle was asked to enumerate more than its order bound.
class resource_limit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two computations that must agree did not. Always a bug, never bad input.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace radram
