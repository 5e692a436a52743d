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
#include <functional>

#include "dispmed/material.hpp"
#include "dispmed/quadrature.hpp"

namespace dispmed {

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;
};

inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, const Vec3& a) { return {s * a.x, s * a.y, s * a.z}; }
inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

struct TripletGeometry {
  std::array<Vec3, 3> points;
};

/// Reduced susceptibilities chi_i = eta_i alpha_i / eps0 of sphere 1,
/// sphere 2 and the medium at one frequency.
struct ChiTriple {
  double chi1 = 0.0, chi2 = 0.0, chi = 0.0;
};

/// chi_i(xi) for the three constituents.
struct ChiProfile {
  std::function<double(double)> chi1;
  std::function<double(double)> chi2;
  std::function<double(double)> chi;

  ChiTriple at(double xi) const { return {chi1(xi), chi2(xi), chi(xi)}; }

  static ChiProfile from_species(const MolecularSpecies& sphere1, const MolecularSpecies& sphere2,
                                 const MolecularSpecies& medium);
};

/// -(3 hbar / 16 pi^3 eps0^2) Int alpha alpha' dxi, in J m^6.
double vdw_coefficient(const MolecularPolarisability& a, const MolecularPolarisability& b,
                       const QuadratureSpec& quad);
/// Same pair inside a dielectric, screened by eps(i xi)^-2.
double vdw_coefficient_in_medium(const MolecularPolarisability& a,
                                 const MolecularPolarisability& b, const ResponseFunction& eps,
                                 const QuadratureSpec& quad);
double vdw_pair(const MolecularPolarisability& a, const MolecularPolarisability& b,
                double distance, const QuadratureSpec& quad);

/// (1 + 3 cos t1 cos t2 cos t3) / (d12^3 d23^3 d31^3) with t_i the interior
/// angles of the triangle.
double at_kernel(const TripletGeometry& g);

/// (3 hbar / 64 pi^4 eps0^3) Int alpha alpha' alpha'' dxi.
double at_coefficient(const MolecularPolarisability& a, const MolecularPolarisability& b,
                      const MolecularPolarisability& c, const QuadratureSpec& quad);
double axilrod_teller(const MolecularPolarisability& a, const MolecularPolarisability& b,
                     const MolecularPolarisability& c, const TripletGeometry& g,
                     const QuadratureSpec& quad);

/// -(hbar R1^3 R2^3 / 3 pi) (chi1 - chi)(chi2 - chi)
double hamaker_integrand(const ChiTriple& t, double radius1, double radius2) noexcept;
/// +(2 hbar R1^3 R2^3 / 9 pi) chi1 chi2 chi
double threeparticle_integrand(const ChiTriple& t, double radius1, double radius2) noexcept;

QuadratureResult c6_hamaker(const ChiProfile& p, double radius1, double radius2,
                            const QuadratureSpec& quad);
QuadratureResult c6_threeparticle(const ChiProfile& p, double radius1, double radius2,
                                  const QuadratureSpec& quad);

} // namespace dispmed
