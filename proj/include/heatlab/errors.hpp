// SPDX-License-Identifier: Apache-2.0
#ifndef HEATLAB_ERRORS_HPP
#define HEATLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace heatlab {

/// Base class of every failure this library raises on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A series or iteration failed to reach the requested tolerance
/// within its configured term cap.
class NonConvergent : public Error {
 public:
  using Error::Error;
};

/// Arguments outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An eigenvalue index that the model excludes (e.g. m == nu).
class DegenerateIndex : public Error {
 public:
  using Error::Error;
};

/// A denominator that must stay positive reached zero or below.
class DenominatorVanishes : public Error {
 public:
  using Error::Error;
};

/// Adaptive ODE integration collapsed its step size.
class IntegrationFailure : public Error {
 public:
  using Error::Error;
};

/// A spectrum without a certified linear tail bound was handed to a
/// truncated summation.
class TailBoundUnavailable : public Error {
 public:
  using Error::Error;
};

/// A parameter outside the supported numeric range (overflow guards).
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Invalid run configuration (CLI / config file).
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace heatlab

#endif  // HEATLAB_ERRORS_HPP
