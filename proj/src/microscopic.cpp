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

#include "dispmed/microscopic.hpp"

#include <cmath>
#include <initializer_list>

#include "dispmed/constants.hpp"
#include "dispmed/errors.hpp"

namespace dispmed {

namespace {

double molecular_scale(std::initializer_list<const MolecularPolarisability*> pols,
                       const QuadratureSpec& quad) {
  if (quad.scale)
    return *quad.scale;
  double strongest = 0.0;
  double scale = default_frequency_scale;
  for (const auto* p : pols)
    for (const auto& t : p->terms())
      if (t.static_value > strongest) {
        strongest = t.static_value;
        scale = t.resonance;
      }
  return scale;
}

double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

} // namespace

ChiProfile ChiProfile::from_species(const MolecularSpecies& sphere1, const MolecularSpecies& sphere2,
                                    const MolecularSpecies& medium) {
  return {[sphere1](double xi) { return clausius_mossotti_dilute(sphere1, xi); },
          [sphere2](double xi) { return clausius_mossotti_dilute(sphere2, xi); },
          [medium](double xi) { return clausius_mossotti_dilute(medium, xi); }};
}

double vdw_coefficient(const MolecularPolarisability& a, const MolecularPolarisability& b,
                       const QuadratureSpec& quad) {
  const double integral =
      integrate_semiinfinite([&](double xi) { return a(xi) * b(xi); }, quad,
                             molecular_scale({&a, &b}, quad))
          .value;
  return -3.0 * hbar / (16.0 * pi * pi * pi * epsilon0 * epsilon0) * integral;
}

double vdw_coefficient_in_medium(const MolecularPolarisability& a,
                                 const MolecularPolarisability& b, const ResponseFunction& eps,
                                 const QuadratureSpec& quad) {
  const double integral = integrate_semiinfinite(
                              [&](double xi) {
                                const double e = eps.value(xi);
                                return a(xi) * b(xi) / (e * e);
                              },
                              quad, molecular_scale({&a, &b}, quad))
                              .value;
  return -3.0 * hbar / (16.0 * pi * pi * pi * epsilon0 * epsilon0) * integral;
}

double vdw_pair(const MolecularPolarisability& a, const MolecularPolarisability& b,
                double distance, const QuadratureSpec& quad) {
  if (!(distance > 0.0))
    throw InvalidArgument("molecule distance must be > 0");
  return vdw_coefficient(a, b, quad) / std::pow(distance, 6);
}

double at_kernel(const TripletGeometry& g) {
  const auto& [p0, p1, p2] = g.points;
  const Vec3 e01 = p1 - p0, e12 = p2 - p1, e20 = p0 - p2;
  const double d01 = norm(e01), d12 = norm(e12), d20 = norm(e20);
  if (!(d01 > 0.0 && d12 > 0.0 && d20 > 0.0))
    throw SingularGeometry("Axilrod-Teller kernel: coincident points");
  // Interior angle at each vertex from the two edges leaving it.
  const double c0 = -dot(e01, e20) / (d01 * d20);
  const double c1 = -dot(e12, e01) / (d12 * d01);
  const double c2 = -dot(e20, e12) / (d20 * d12);
  const double d3 = d01 * d12 * d20;
  return (1.0 + 3.0 * c0 * c1 * c2) / (d3 * d3 * d3);
}

double at_coefficient(const MolecularPolarisability& a, const MolecularPolarisability& b,
                      const MolecularPolarisability& c, const QuadratureSpec& quad) {
  const double integral =
      integrate_semiinfinite([&](double xi) { return a(xi) * b(xi) * c(xi); }, quad,
                             molecular_scale({&a, &b, &c}, quad))
          .value;
  return 3.0 * hbar / (64.0 * std::pow(pi, 4) * std::pow(epsilon0, 3)) * integral;
}

double axilrod_teller(const MolecularPolarisability& a, const MolecularPolarisability& b,
                      const MolecularPolarisability& c, const TripletGeometry& g,
                      const QuadratureSpec& quad) {
  const double kernel = at_kernel(g);
  return at_coefficient(a, b, c, quad) * kernel;
}

double hamaker_integrand(const ChiTriple& t, double radius1, double radius2) noexcept {
  const double r3 = std::pow(radius1, 3) * std::pow(radius2, 3);
  return -hbar * r3 / (3.0 * pi) * ((t.chi1 - t.chi) * (t.chi2 - t.chi));
}

double threeparticle_integrand(const ChiTriple& t, double radius1, double radius2) noexcept {
  const double r3 = std::pow(radius1, 3) * std::pow(radius2, 3);
  return 2.0 * hbar * r3 / (9.0 * pi) * (t.chi1 * t.chi2 * t.chi);
}

QuadratureResult c6_hamaker(const ChiProfile& p, double radius1, double radius2,
                            const QuadratureSpec& quad) {
  if (!(radius1 > 0.0 && radius2 > 0.0))
    throw InvalidArgument("sphere radii must be > 0");
  return integrate_semiinfinite(
      [&](double xi) { return hamaker_integrand(p.at(xi), radius1, radius2); }, quad);
}

QuadratureResult c6_threeparticle(const ChiProfile& p, double radius1, double radius2,
                                  const QuadratureSpec& quad) {
  if (!(radius1 > 0.0 && radius2 > 0.0))
    throw InvalidArgument("sphere radii must be > 0");
  return integrate_semiinfinite(
      [&](double xi) { return threeparticle_integrand(p.at(xi), radius1, radius2); }, quad);
}

} // namespace dispmed
