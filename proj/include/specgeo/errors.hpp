#pragma once

#include <stdexcept>
#include <string>

namespace specgeo {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Validation-type failures (CLI exit code 2).
struct ValidationError : Error {
  using Error::Error;
};
struct NonIntegerEuler : ValidationError {
  using ValidationError::ValidationError;
};
struct WrongCurvature : ValidationError {
  using ValidationError::ValidationError;
};
struct DomainError : ValidationError {
  using ValidationError::ValidationError;
};
struct MissingCoefficient : ValidationError {
  using ValidationError::ValidationError;
};
struct ZeroPerimeterAmbiguous : ValidationError {
  using ValidationError::ValidationError;
};
struct ZeroCurvature : ValidationError {
  using ValidationError::ValidationError;
};
struct RangeMismatch : ValidationError {
  using ValidationError::ValidationError;
};
struct InsufficientSamples : ValidationError {
  using ValidationError::ValidationError;
};
struct UnsupportedPower : ValidationError {
  using ValidationError::ValidationError;
};

// Numerical failures (CLI exit code 3).
struct NumericalError : Error {
  using Error::Error;
};
struct QuadratureFailure : NumericalError {
  double error_estimate = 0.0;
  QuadratureFailure(const std::string& what, double err)
      : NumericalError(what), error_estimate(err) {}
};
struct NonConvergent : NumericalError {
  using NumericalError::NumericalError;
};
struct IllConditioned : NumericalError {
  using NumericalError::NumericalError;
};
struct NegativeRatio : NumericalError {
  using NumericalError::NumericalError;
};
struct NonReciprocalAngle : NumericalError {
  using NumericalError::NumericalError;
};

}  // namespace specgeo
