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

#include <array>
#include <cstdint>

#include "dispmed/dispersion.hpp"

namespace dispmed {

// ---------------------------------------------------------------------------
// Hamaker pair summation

/// G = sum_{i in S1} sum_{j in S2} pitch^6 / |r_i - r_j|^6 over cubic cells
/// of side `pitch` whose centres lie inside each sphere. Requires
/// pitch <= min(R1, R2)/10 and separation > R1 + R2.
double hamaker_lattice_sum(double radius1, double radius2, double separation, double pitch);

/// Continuum value of Int_V1 Int_V2 d^-6 (Hamaker's closed form).
double hamaker_sphere_geometry(double radius1, double radius2, double separation);

/// Bound on the relative volume error of the cell-centre discretisation of a
/// sphere: the shell of half-diagonal thickness around the surface.
double lattice_volume_error_bound(double radius, double pitch);

// ---------------------------------------------------------------------------
// Three-body medium integral

struct MonteCarloSpec {
  std::uint64_t samples = 10'000'000;
  std::uint64_t seed = 20260101;
  unsigned chunks = 64;

  void validate() const;
};

struct MonteCarloResult {
  double estimate = 0.0;
  double standard_error = 0.0;
};

/// Int over all space outside both spheres of the Axilrod-Teller kernel with
/// two vertices at the sphere centres, in 1/m^6. The result depends only on
/// (inputs, spec): chunks are fixed units of work with their own streams and
/// are reduced in order, whatever `workers` is.
MonteCarloResult at_medium_mc(double separation, double radius1, double radius2,
                              const MonteCarloSpec& mc, unsigned workers = 1);

/// 8 pi / (3 r^6), the value the three-particle coefficient implies.
double at_medium_point_limit(double separation);

// ---------------------------------------------------------------------------
// Susceptibility expansion of the C6 integrand

struct ExpansionReport {
  StressChoice choice = StressChoice::Abraham;
  double chi1_chi2 = 0.0;
  double chi1_chi = 0.0;
  double chi2_chi = 0.0;
  double chi_chi = 0.0;
  double chi1_chi2_chi = 0.0;
  // Richardson error estimates, same order as above.
  std::array<double, 5> error{};
  // chi1_chi2_chi / (2 hbar R1^3 R2^3 / 9 pi)
  double third_order_ratio = 0.0;
};

/// hbar R1^3 R2^3 / (3 pi): magnitude of every Hamaker monomial coefficient.
double hamaker_monomial_scale(double radius1, double radius2) noexcept;
/// 2 hbar R1^3 R2^3 / (9 pi): the three-particle coefficient.
double threeparticle_monomial_scale(double radius1, double radius2) noexcept;

/// Taylor coefficients of the fixed-frequency C6 integrand of a non-magnetic
/// system with constant eps_i = 1 + chi_i, from centred differences with one
/// Richardson step. Requires 0 < h <= 1e-2.
ExpansionReport expand_c6_integrand(double radius1, double radius2, StressChoice choice,
                                    double h = 1e-3);

struct ConsistencyReport {
  ExpansionReport expansion;
  // Relative deviation of (chi1chi2, chi1chi, chi2chi, chi^2) from (-,+,+,-) scale.
  std::array<double, 4> degree2_deviation{};
  bool hamaker_match = false;
  bool three_particle_match = false;
};

inline constexpr double degree2_tolerance = 1e-8;
inline constexpr double third_order_tolerance = 1e-6;

ConsistencyReport verify_consistency(StressChoice choice, double h = 1e-3,
                                     double radius1 = 1e-9, double radius2 = 1e-9);

} // namespace dispmed
