#pragma once

#include <stdexcept>
#include <string>

namespace mcc {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live over different variable sets, truncation orders or models.
class MismatchError : public Error {
 public:
  using Error::Error;
};

/// A division that must be exact left a remainder.
class InexactDivisionError : public Error {
 public:
  using Error::Error;
};

/// A result left the subring it was declared to live in.
class IntegralityError : public Error {
 public:
  using Error::Error;
};

/// A precondition on the arguments does not hold.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The requested (dimension, order) pair has no known input data.
class UnsupportedRangeError : public Error {
 public:
  using Error::Error;
};

/// Two independent computations of the same quantity disagree.
class InternalCheckError : public Error {
 public:
  using Error::Error;
};

}  // namespace mcc
