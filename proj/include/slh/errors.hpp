// Copyright (c) 2026 The slh-netsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace slh {

// Base class for everything thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Structural mismatch when combining models (registries, port counts).
class CompositionError : public Error {
 public:
  using Error::Error;
};

// A mode required by embed() is absent from the target registry.
class EmbedError : public Error {
 public:
  using Error::Error;
};

// A physical parameter is outside its admissible domain.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// The resolvent is numerically singular at the requested frequency.
class ResonanceError : public Error {
 public:
  ResonanceError(const std::string& what, double omega)
      : Error(what), omega_(omega) {}
  double omega() const { return omega_; }

 private:
  double omega_ = 0.0;
};

// An operation that needs a Hurwitz-stable system was given an unstable one.
class StabilityError : public Error {
 public:
  using Error::Error;
};

// A parameter scan could not produce a usable result.
class ScanError : public Error {
 public:
  using Error::Error;
};

// An internal numerical check failed (solver breakdown, lost realness, ...).
class NumericError : public Error {
 public:
  using Error::Error;
};

// Config text could not be parsed or validated; carries the 1-based line.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_ = 0;
};

}  // namespace slh
