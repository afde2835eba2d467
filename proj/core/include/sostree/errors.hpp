#pragma once

#include <stdexcept>
#include <string>

namespace sostree {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of an operation (bad theta, missing
/// branch, invalid probability vector, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A caller-side contract was violated, e.g. a boundary law that does not
/// solve the fixed-point system at the given coupling.
class PreconditionError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A root search was given an interval without a sign change.
class BracketError : public Error {
 public:
  using Error::Error;
};

/// A non-finite value or an unsolvable linear system turned up mid-computation.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// An internal numerical invariant failed (for example complex eigenvalues
/// where the model guarantees real ones).
class InvariantError : public NumericError {
 public:
  using NumericError::NumericError;
};

}  // namespace sostree
