#pragma once

#include <stdexcept>
#include <string>

namespace kfin {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A vector or form does not have the length/degree the operation requires.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// An argument violates an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The sampled Hilbert function has not settled into a linear polynomial.
/// Raising kmax usually resolves it.
class NotStabilized : public Error {
 public:
  using Error::Error;
};

}  // namespace kfin
