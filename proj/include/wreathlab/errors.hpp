#pragma once

#include <stdexcept>
#include <string>

namespace wreathlab {

// Base of every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or mismatched input (bad symbol, mixed base groups, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

// Query that has no meaning for the chosen base group (pebble sets on Z^2).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// Node budget or size cap exhausted.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// An identity the library proves internally failed to hold. Never expected.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace wreathlab
