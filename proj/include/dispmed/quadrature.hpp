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

#include <functional>
#include <optional>

namespace dispmed {

struct QuadratureSpec {
  // Mapping scale xi_c in rad/s. Unset: chosen by the caller's context
  // (dominant resonance of a system, else default_frequency_scale).
  std::optional<double> scale;
  double relative_tolerance = 1e-10;
  int max_doublings = 12;

  void validate() const;
  double scale_or(double fallback) const { return scale.value_or(fallback); }
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
};

/// Number of Gauss-Legendre nodes per panel.
inline constexpr int gauss_points_per_panel = 20;

/// Integrates f over [0, inf) after the substitution xi = xi_c u/(1-u),
/// using a composite Gauss-Legendre rule on 2^k equal panels in u. The
/// panel count doubles until two successive estimates agree to the
/// relative tolerance. Throws ConvergenceError with the last estimate
/// otherwise.
QuadratureResult integrate_semiinfinite(const std::function<double(double)>& f,
                                        const QuadratureSpec& quad);

/// Same, with xi_c supplied explicitly (overrides quad.scale).
QuadratureResult integrate_semiinfinite(const std::function<double(double)>& f,
                                        const QuadratureSpec& quad, double scale);

/// Composite rule on [0, 1] with 2^level panels. Exposed for exactness tests.
double gauss_composite_unit(const std::function<double(double)>& g, int level);

} // namespace dispmed
