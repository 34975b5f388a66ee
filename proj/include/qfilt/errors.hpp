#pragma once

#include <stdexcept>
#include <string>

namespace qfilt {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad user configuration: empty intervals, mismatched lengths, unknown keys.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Measurement model parameters outside their admissible range.
class InvalidModelError : public Error {
 public:
  using Error::Error;
};

/// All particle weights are zero; callers decide the fallback.
class DegenerateWeightsError : public Error {
 public:
  using Error::Error;
};

/// An observation with zero total likelihood mass under the exact recursion.
class ImpossibleObservationError : public Error {
 public:
  using Error::Error;
};

/// A log-log fit with fewer than three usable points.
class UndefinedFitError : public Error {
 public:
  using Error::Error;
};

}  // namespace qfilt
