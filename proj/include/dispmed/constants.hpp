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

#include <numbers>

namespace dispmed {

// SI values (CODATA 2018).
inline constexpr double hbar = 1.054571817e-34;     // J s
inline constexpr double epsilon0 = 8.8541878128e-12; // F/m
inline constexpr double mu0 = 1.25663706212e-6;      // H/m
inline constexpr double speed_of_light = 299792458.0; // m/s

inline constexpr double pi = std::numbers::pi;

// Fallback quadrature scale when a system has no oscillator resonance.
inline constexpr double default_frequency_scale = 1e16; // rad/s

} // namespace dispmed
