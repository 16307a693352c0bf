#pragma once

#include <stdexcept>
#include <string>

namespace repbasis {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad flags, unparsable files, violated preconditions.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A proof-guaranteed invariant failed. Always a bug in this library.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// An enumeration or dense table would exceed the configured budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// The polynomial has no h-th root with 0/1 coefficients.
class NoRootError : public Error {
 public:
  using Error::Error;
};

/// A representation table does not cover the support it claims to describe.
class TruncationError : public Error {
 public:
  using Error::Error;
};

class InvalidGadget : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Fewer than two distinct sums exist, so no gap is defined.
class DegenerateError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// No admissible spread parameter was found for the sparsity bound.
class SparsityError : public Error {
 public:
  using Error::Error;
};

class CongruenceError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class HeadCountError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

}  // namespace repbasis
