#pragma once

#include <stdexcept>
#include <string>

namespace probint {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Step-size is non-positive or exceeds the integration domain.
class InvalidStep : public Error {
 public:
  using Error::Error;
};

/// Step-size does not evenly partition the integration domain.
class StepNotDivisor : public Error {
 public:
  using Error::Error;
};

/// Two interpolation abscissae coincide (within 1e-14 relative).
class DuplicateAbscissa : public Error {
 public:
  using Error::Error;
};

/// Kernel parameters outside their valid range.
class InvalidParams : public Error {
 public:
  using Error::Error;
};

/// Training data cannot support a GP fit (fewer than two distinct inputs).
class DegenerateData : public Error {
 public:
  using Error::Error;
};

/// Kernel matrix is not positive definite even after jitter escalation.
class FactorizationFailure : public Error {
 public:
  using Error::Error;
};

/// Posterior uncertainty at h=0 is exactly zero; step selection is undefined.
class DegenerateUncertainty : public Error {
 public:
  using Error::Error;
};

/// Position coincides with the force singularity at the origin.
class SingularPosition : public Error {
 public:
  using Error::Error;
};

/// An integration state left the finite floating-point range.
class NonFiniteState : public Error {
 public:
  using Error::Error;
};

}  // namespace probint
