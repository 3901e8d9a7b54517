#pragma once

#include <stdexcept>
#include <string>

namespace colligo {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes or block sizes do not fit together.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A matrix that had to be inverted (or solved against) is singular.
class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

/// A rational function was evaluated at a root of its denominator.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Input to an operation that requires a full-rank lattice was degenerate.
class NotALatticeError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Generic-position hypotheses of the commutativity conjugator failed.
class GenericityError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Scalar realization hit a step with no rational pole/zero to peel.
class RealizationError : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace colligo
