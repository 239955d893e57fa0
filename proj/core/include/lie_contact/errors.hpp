#pragma once

#include <stdexcept>
#include <string>

namespace lie_contact {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input rejected before any numerics ran (bad names, shapes, schema).
class ValidationError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class UnknownGroup : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NonConvexWheel : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Numerical breakdown: tolerance breach, singular configuration.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class NonGroupElement : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Contact hyperplane tangent to the equation surface (alpha parallel to dF).
class TangencyPoint : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Characteristic kernel has dimension > 1.
class DegenerateKernel : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Support direction is zero, so the touching generator is undefined.
class DegenerateDirection : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class StepRejected : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// The contact hyperplane does not contain the fibre of the quotient, so it
/// has no image hyperplane in the base.
class NonTransversal : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace lie_contact
