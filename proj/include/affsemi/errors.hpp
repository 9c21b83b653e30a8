#pragma once

#include <stdexcept>
#include <string>

namespace affsemi {

// Base class for every error the library throws on purpose.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// make_primitive applied to the zero vector.
struct ZeroVectorError : Error {
  ZeroVectorError() : Error("zero vector has no primitive representative") {}
};

// Vectors of different dimensions mixed in one operation.
struct DimensionMismatchError : Error {
  explicit DimensionMismatchError(const std::string& what) : Error(what) {}
};

// Ray validation failed: wrong count, negative entry, non-primitive ray,
// or linearly dependent rays. Rays are rejected, never silently repaired.
struct InvalidRaysError : Error {
  explicit InvalidRaysError(const std::string& what) : Error(what) {}
};

// An enumeration would exceed the configured budget. The result is an error,
// never a silently truncated set.
struct LimitExceededError : Error {
  explicit LimitExceededError(const std::string& what) : Error(what) {}
};

// Ulrich test requested for an element outside the semigroup interior.
struct NotInOmegaError : Error {
  explicit NotInOmegaError(const std::string& what) : Error(what) {}
};

// Operation precondition not met (wrong dimension, wrong bottom element, ...).
struct InapplicableError : Error {
  explicit InapplicableError(const std::string& what) : Error(what) {}
};

// Malformed input document or command-line argument.
struct InputError : Error {
  explicit InputError(const std::string& what) : Error(what) {}
};

}  // namespace affsemi
