#pragma once

#include <stdexcept>
#include <string>

namespace vero {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input violates an operation's precondition (bad arity, non-prime modulus, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The instance is too large for the selected exhaustive mode.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A check cannot be decided with the data supplied (e.g. no plane family).
class IndeterminateError : public Error {
 public:
  using Error::Error;
};

/// A structural claim that is expected to hold was refuted by computation.
class FalsificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace vero
