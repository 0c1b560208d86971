/*
 * Copyright 2026 The memelem Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace memelem {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the operating range or otherwise outside a function's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Requested derivative order or chain depth exceeds what the object supports.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

/// A numerical procedure (root bracketing, grid checks) could not complete.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Invalid user configuration. `field()` names the offending entry.
class ConfigError : public Error {
 public:
  ConfigError(std::string field, const std::string& what)
      : Error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Two independent computations of the same quantity disagreed.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Request lies outside the modelled element family (e.g. positive exponents).
class OutOfScopeError : public Error {
 public:
  using Error::Error;
};

}  // namespace memelem
