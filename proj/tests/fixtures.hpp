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

// Shared reference systems for tests.
#pragma once

#include "dispmed/dispersion.hpp"

namespace fixtures {

using dispmed::Oscillator;
using dispmed::ResponseFunction;

inline ResponseFunction osc(double wp, double w0, double gamma = 0.0) {
  return ResponseFunction::oscillators({Oscillator(wp, w0, gamma)});
}

inline const ResponseFunction vacuum = ResponseFunction::constant(1.0);

// Identical non-magnetic spheres, wp = w0 = 1e16 rad/s, R = 1 nm, in vacuum.
inline dispmed::TwoSphereSystem single_oscillator_vacuum() {
  const auto eps = osc(1e16, 1e16);
  return {{1e-9, eps, vacuum}, {1e-9, eps, vacuum}, {vacuum, vacuum}, 1e-8};
}

// Medium and spheres each with one electric and one magnetic oscillator.
inline dispmed::TwoSphereSystem reference_md_system() {
  return {{1e-9, osc(1.5e16, 1e16, 1e14), osc(4e15, 6e15)},
          {2e-9, osc(2e16, 1.5e16), osc(5e15, 4e15)},
          {osc(8e15, 1.2e16), osc(3e15, 5e15)},
          2e-8};
}

} // namespace fixtures
