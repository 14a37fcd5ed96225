#pragma once

#include <stdexcept>
#include <string>

namespace patchcap {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid patch configuration (overlap, nonpositive radius, bad sizes).
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

/// Random layout generation gave up after exhausting its retries.
class PackingError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain where a formula is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The asymptotic bracket became nonpositive; the expansion is not usable.
class AsymptoticValidityError : public Error {
 public:
  using Error::Error;
};

/// A Monte Carlo trajectory exceeded its cycle cap.
class NonterminationError : public Error {
 public:
  using Error::Error;
};

/// Malformed experiment or layout description.
class SpecError : public Error {
 public:
  using Error::Error;
};

}  // namespace patchcap
