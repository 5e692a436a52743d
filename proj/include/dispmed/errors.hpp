// Copyright 2026 The dispmed Authors
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

namespace dispmed {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Precondition or construction-invariant violation.
class InvalidArgument : public Error {
public:
  using Error::Error;
};

// Tabulated data queried outside its domain.
class RangeError : public Error {
public:
  using Error::Error;
};

// A frequency integral over [0, inf) whose integrand does not decay.
class DivergentIntegral : public Error {
public:
  using Error::Error;
};

// Coincident points in a geometric kernel.
class SingularGeometry : public Error {
public:
  using Error::Error;
};

// Quadrature tolerance not reached. Carries the best estimate so callers may
// still report it.
class ConvergenceError : public Error {
public:
  ConvergenceError(const std::string& what, double best_estimate, double error_estimate)
      : Error(what), best_estimate_(best_estimate), error_estimate_(error_estimate) {}

  double best_estimate() const noexcept { return best_estimate_; }
  double error_estimate() const noexcept { return error_estimate_; }

private:
  double best_estimate_;
  double error_estimate_;
};

} // namespace dispmed
