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

#include "dispmed/material.hpp"

namespace dispmed {

struct SphereSpec {
  double radius = 0.0; // m
  ResponseFunction permittivity;
  ResponseFunction permeability;

  void validate() const;
  bool operator==(const SphereSpec&) const = default;
};

struct MediumSpec {
  ResponseFunction permittivity;
  ResponseFunction permeability;

  bool operator==(const MediumSpec&) const = default;
};

/// 4 pi R^3 (inner - outer)/(inner + 2 outer). Shared by the electric and
/// magnetic excess polarisabilities, which makes the two bit-for-bit dual.
double reduced_excess(double radius, double inner, double outer) noexcept;

/// alpha* / (eps0 eps): electric excess polarisability in m^3.
double reduced_excess_alpha(const SphereSpec& s, const MediumSpec& m, double xi);
/// mu0 mu beta*: magnetic excess polarisability in m^3.
double reduced_excess_beta(const SphereSpec& s, const MediumSpec& m, double xi);

/// alpha* = 4 pi eps0 eps R^3 (eps1 - eps)/(eps1 + 2 eps), in C m^2/V.
double excess_alpha(const SphereSpec& s, const MediumSpec& m, double xi);
/// beta* = 4 pi R^3/(mu0 mu) (mu1 - mu)/(mu1 + 2 mu), in A m^2/T.
double excess_beta(const SphereSpec& s, const MediumSpec& m, double xi);

} // namespace dispmed
