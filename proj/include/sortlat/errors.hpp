#pragma once

#include <stdexcept>
#include <string>

namespace sortlat {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed diagram, gamma word or other textual input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A precondition on an argument was violated (index out of range,
/// non-permutation, field mismatch, inversion of zero, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An infinite-type construction was requested without a length cap.
class CapRequired : public Error {
 public:
  using Error::Error;
};

/// A join (or an SB interval) of a capped lattice leaves the cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A configured size limit (group order, chain count) was exceeded.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Never swallowed.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace sortlat
