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

#include "dispmed/quadrature.hpp"

#include <cmath>
#include <sstream>

#include <boost/math/quadrature/gauss.hpp>

#include "dispmed/constants.hpp"
#include "dispmed/errors.hpp"

namespace dispmed {

using Rule = boost::math::quadrature::gauss<double, gauss_points_per_panel>;

void QuadratureSpec::validate() const {
  if (scale && !(std::isfinite(*scale) && *scale > 0.0))
    throw InvalidArgument("quadrature scale must be > 0");
  if (!(relative_tolerance > 0.0 && relative_tolerance < 1.0))
    throw InvalidArgument("quadrature tolerance must lie in (0, 1)");
  if (max_doublings < 1)
    throw InvalidArgument("quadrature needs at least one doubling");
}

double gauss_composite_unit(const std::function<double(double)>& g, int level) {
  const auto panels = std::size_t{1} << level;
  const double width = 1.0 / static_cast<double>(panels);
  const auto& x = Rule::abscissa();
  const auto& w = Rule::weights();
  // Node order is fixed: panels left to right, then the +/- node pairs.
  double sum = 0.0;
  for (std::size_t p = 0; p < panels; ++p) {
    const double mid = (static_cast<double>(p) + 0.5) * width;
    const double half = 0.5 * width;
    double panel = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (x[k] == 0.0) {
        panel += w[k] * g(mid);
      } else {
        panel += w[k] * (g(mid - half * x[k]) + g(mid + half * x[k]));
      }
    }
    sum += half * panel;
  }
  return sum;
}

QuadratureResult integrate_semiinfinite(const std::function<double(double)>& f,
                                        const QuadratureSpec& quad) {
  return integrate_semiinfinite(f, quad, quad.scale_or(default_frequency_scale));
}

QuadratureResult integrate_semiinfinite(const std::function<double(double)>& f,
                                        const QuadratureSpec& quad, double scale) {
  quad.validate();
  if (!(std::isfinite(scale) && scale > 0.0))
    throw InvalidArgument("quadrature scale must be > 0");

  // xi = s u/(1-u), dxi = s/(1-u)^2 du. Gauss nodes never touch u = 1.
  const auto mapped = [&](double u) {
    const double v = 1.0 - u;
    return f(scale * u / v) * scale / (v * v);
  };

  constexpr int min_level = 2;
  double previous = gauss_composite_unit(mapped, 0);
  double current = previous;
  double diff = 0.0;
  for (int level = 1; level <= quad.max_doublings; ++level) {
    current = gauss_composite_unit(mapped, level);
    if (!std::isfinite(current))
      throw ConvergenceError("non-finite quadrature estimate", current, INFINITY);
    diff = std::abs(current - previous);
    if (level >= min_level && diff <= quad.relative_tolerance * std::abs(current))
      return {current, diff};
    previous = current;
  }
  std::ostringstream ss;
  ss << "quadrature did not reach relative tolerance " << quad.relative_tolerance << " after "
     << quad.max_doublings << " doublings (estimate " << current << ", last change " << diff << ")";
  throw ConvergenceError(ss.str(), current, diff);
}

} // namespace dispmed
