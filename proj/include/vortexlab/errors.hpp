// Copyright 2026 The vortexlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace vortexlab {

/// Base of every error the library raises. `kind()` is the stable,
/// machine-readable tag used by the command line front end.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept = 0;
  /// Exit status the CLI maps this error to.
  virtual int exit_code() const noexcept = 0;
};

/// Malformed or out-of-contract input.
class InputError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "input"; }
  int exit_code() const noexcept override { return 1; }
};

/// Operation is not defined for this kind of vortex.
class UnsupportedError : public InputError {
 public:
  using InputError::InputError;
  const char* kind() const noexcept override { return "unsupported"; }
};

/// Exact or near-exact small-divisor resonance.
class ResonanceError : public InputError {
 public:
  ResonanceError(long frequency, const std::string& detail)
      : InputError(detail), frequency_(frequency) {}
  const char* kind() const noexcept override { return "resonance"; }
  long frequency() const noexcept { return frequency_; }

 private:
  long frequency_;
};

/// No invariant set can be built for this map (e.g. the identity).
class DegenerateError : public InputError {
 public:
  using InputError::InputError;
  const char* kind() const noexcept override { return "degenerate"; }
};

/// Numerically ambiguous classification of an isometry.
class AmbiguityError : public InputError {
 public:
  using InputError::InputError;
  const char* kind() const noexcept override { return "ambiguity"; }
};

/// A fiber of a tube is empty.
class TubeViolation : public InputError {
 public:
  using InputError::InputError;
  const char* kind() const noexcept override { return "tube-violation"; }
};

/// A certified property failed to hold.
class PropertyViolation : public Error {
 public:
  PropertyViolation(std::string property, const std::string& detail)
      : Error(property + ": " + detail), property_(std::move(property)) {}
  const char* kind() const noexcept override { return "property-violation"; }
  int exit_code() const noexcept override { return 2; }
  const std::string& property() const noexcept { return property_; }

 private:
  std::string property_;
};

/// An internal bound of the staged construction was violated.
class ConstructionBug : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "construction-bug"; }
  int exit_code() const noexcept override { return 2; }
};

/// Bounded parameter search found no admissible candidate.
class SearchExhausted : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "search-exhausted"; }
  int exit_code() const noexcept override { return 2; }
};

}  // namespace vortexlab
