#pragma once

#include <stdexcept>
#include <string>

namespace conehelly {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: dimension mismatch, parameter out of range, violated
/// precondition, zero outer normal.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Subset enumeration refused because the input exceeds the cutoff.
class CapacityExceeded : public Error {
 public:
  using Error::Error;
};

/// A proven statement failed on a concrete instance. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace conehelly
