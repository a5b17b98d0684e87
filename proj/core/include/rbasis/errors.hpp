#pragma once

#include <stdexcept>
#include <string>

namespace rbasis {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent configuration document.
struct ConfigError : Error {
  using Error::Error;
};

// The child-bound scan hit its hard cap without the admissibility inequality
// failing for a full stretch. Usually means max(H_n)/n does not tend to 0.
struct BoundScanError : Error {
  using Error::Error;
};

struct DigestMismatch : Error {
  using Error::Error;
};

// A brute-force oracle was asked for more work than its guard allows.
struct GuardExceeded : Error {
  using Error::Error;
};

}  // namespace rbasis
