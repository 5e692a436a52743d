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

#include "dispmed/polarisability.hpp"

#include <cmath>

#include "dispmed/constants.hpp"
#include "dispmed/errors.hpp"

namespace dispmed {

void SphereSpec::validate() const {
  if (!(std::isfinite(radius) && radius > 0.0))
    throw InvalidArgument("sphere radius must be > 0");
}

double reduced_excess(double radius, double inner, double outer) noexcept {
  return 4.0 * pi * radius * radius * radius * (inner - outer) / (inner + 2.0 * outer);
}

double reduced_excess_alpha(const SphereSpec& s, const MediumSpec& m, double xi) {
  return reduced_excess(s.radius, s.permittivity.value(xi), m.permittivity.value(xi));
}

double reduced_excess_beta(const SphereSpec& s, const MediumSpec& m, double xi) {
  return reduced_excess(s.radius, s.permeability.value(xi), m.permeability.value(xi));
}

double excess_alpha(const SphereSpec& s, const MediumSpec& m, double xi) {
  return epsilon0 * m.permittivity.value(xi) * reduced_excess_alpha(s, m, xi);
}

double excess_beta(const SphereSpec& s, const MediumSpec& m, double xi) {
  return reduced_excess_beta(s, m, xi) / (mu0 * m.permeability.value(xi));
}

} // namespace dispmed
