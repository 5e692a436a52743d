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

#include <string_view>

#include "dispmed/material.hpp"
#include "dispmed/polarisability.hpp"
#include "dispmed/quadrature.hpp"

namespace dispmed {

/// Which stress tensor the force is built from. The Maxwell choice carries
/// one extra power of the medium response in each term.
enum class StressChoice { Abraham, Maxwell };

std::string_view to_string(StressChoice c) noexcept;

/// Electric and magnetic parts of a dispersion coefficient (J m^6 for C6,
/// J m^3 for C3). total == electric_term + magnetic_term.
struct CoefficientBreakdown {
  double electric_term = 0.0;
  double magnetic_term = 0.0;
  double total = 0.0;
  double quadrature_error_estimate = 0.0;
};
using C6Breakdown = CoefficientBreakdown;
using C3Breakdown = CoefficientBreakdown;

struct TwoSphereSystem {
  SphereSpec sphere1;
  SphereSpec sphere2;
  MediumSpec medium;
  double separation = 0.0; // centre to centre, m

  void validate() const;
  bool operator==(const TwoSphereSystem&) const = default;
};

/// Response values of all constituents at one imaginary frequency.
struct LocalResponse {
  double eps1 = 1.0, mu1 = 1.0;
  double eps2 = 1.0, mu2 = 1.0;
  double eps = 1.0, mu = 1.0;
};

struct IntegrandTerms {
  double electric = 0.0;
  double magnetic = 0.0;
  double total() const noexcept { return electric + magnetic; }
};

// Value-level kernels. No invariant checks on the response values, so they
// can be probed off the physical domain (finite-difference stencils).
IntegrandTerms c6_integrand_terms(double radius1, double radius2, const LocalResponse& v,
                                  StressChoice choice) noexcept;
IntegrandTerms c3_integrand_terms(double radius, double eps1, double mu1, double eps, double mu,
                                  StressChoice choice) noexcept;

/// -(3 hbar / 16 pi^3) [alpha1* alpha2* / (eps0^2 eps^p) + mu0^2 mu^p beta1* beta2*],
/// p = 2 (Abraham) or 3 (Maxwell).
double c6_integrand(const SphereSpec& s1, const SphereSpec& s2, const MediumSpec& m,
                    StressChoice choice, double xi);
IntegrandTerms c6_integrand_split(const SphereSpec& s1, const SphereSpec& s2, const MediumSpec& m,
                                  StressChoice choice, double xi);

/// Non-retarded two-sphere coefficient, U = C6 / r^6. Throws
/// DivergentIntegral if any response function fails the decay gate.
C6Breakdown c6(const TwoSphereSystem& sys, StressChoice choice, const QuadratureSpec& quad);

double potential(double c6_total, double separation);
/// -dU/dr = 6 C6 / r^7; negative means attraction.
double force_magnitude(double c6_total, double separation);

/// -(hbar / 16 pi^2) [alpha* / (eps0 eps^q) - mu0 mu^q beta*], q = 1 or 2.
double c3_integrand(const SphereSpec& s, const MediumSpec& m, StressChoice choice, double xi);

/// Sphere in front of a perfect mirror, U = C3 / z^3.
C3Breakdown c3(const SphereSpec& s, const MediumSpec& m, StressChoice choice,
               const QuadratureSpec& quad);

/// Swaps permittivity and permeability of the medium and both spheres.
TwoSphereSystem duality_transform(const TwoSphereSystem& sys);

/// The two-sphere formula with molecular polarisabilities in place of the
/// excess ones (electric only).
QuadratureResult c6_molecular(const MolecularPolarisability& alpha1,
                              const MolecularPolarisability& alpha2, const MediumSpec& m,
                              StressChoice choice, const QuadratureSpec& quad);

/// Quadrature scale used when QuadratureSpec::scale is unset.
double frequency_scale(const TwoSphereSystem& sys, const QuadratureSpec& quad);
double frequency_scale(const SphereSpec& s, const MediumSpec& m, const QuadratureSpec& quad);

} // namespace dispmed
