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

#include "dispmed/dispersion.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "dispmed/constants.hpp"
#include "dispmed/errors.hpp"

namespace dispmed {

namespace {

constexpr double c6_prefactor = -3.0 * hbar / (16.0 * pi * pi * pi);
constexpr double c3_prefactor = -hbar / (16.0 * pi * pi);

// Susceptibilities must fall by 1e-3 well inside the mapped integration
// range, so the gate is placed three decades above the slowest scale.
constexpr double decay_horizon_factor = 1e3;

double positive_zero(double v) { return v + 0.0; }

template <std::size_t N>
void require_decay(const std::array<const ResponseFunction*, N>& fns,
                   const std::array<const char*, N>& names, double scale) {
  double horizon = scale;
  for (const auto* f : fns)
    horizon = std::max(horizon, f->characteristic_frequency().value_or(0.0));
  horizon *= decay_horizon_factor;
  for (std::size_t k = 0; k < N; ++k) {
    if (!validate_decay(*fns[k], horizon)) {
      std::ostringstream ss;
      ss << "divergent frequency integral: " << names[k]
         << " does not decay on the imaginary axis (checked at xi=" << horizon << " rad/s)";
      throw DivergentIntegral(ss.str());
    }
  }
}

double scale_from(std::initializer_list<const ResponseFunction*> fns, const QuadratureSpec& quad) {
  if (quad.scale)
    return *quad.scale;
  double strength = -1.0;
  std::optional<double> best;
  for (const auto* f : fns) {
    const auto* sum = std::get_if<ResponseFunction::OscillatorSum>(&f->model());
    if (!sum)
      continue;
    for (const auto& o : sum->terms) {
      const double wp = o.plasma_strength();
      // Ties go to the higher resonance so the choice is order independent.
      if (wp > 0.0 && (wp > strength || (wp == strength && o.resonance() > *best))) {
        strength = wp;
        best = o.resonance();
      }
    }
  }
  return best.value_or(default_frequency_scale);
}

} // namespace

std::string_view to_string(StressChoice c) noexcept {
  return c == StressChoice::Abraham ? "Abraham" : "Maxwell";
}

void TwoSphereSystem::validate() const {
  sphere1.validate();
  sphere2.validate();
  if (!(std::isfinite(separation) && separation > sphere1.radius + sphere2.radius))
    throw InvalidArgument("sphere separation must exceed the sum of the radii");
}

IntegrandTerms c6_integrand_terms(double radius1, double radius2, const LocalResponse& v,
                                  StressChoice choice) noexcept {
  // With a = alpha*/(eps0 eps) and b = mu0 mu beta*:
  //   alpha1 alpha2/(eps0^2 eps^p) = a1 a2 eps^(2-p)
  //   mu0^2 mu^p beta1 beta2       = b1 b2 mu^(p-2)
  const double a1 = reduced_excess(radius1, v.eps1, v.eps);
  const double a2 = reduced_excess(radius2, v.eps2, v.eps);
  const double b1 = reduced_excess(radius1, v.mu1, v.mu);
  const double b2 = reduced_excess(radius2, v.mu2, v.mu);
  double e = a1 * a2;
  double m = b1 * b2;
  if (choice == StressChoice::Maxwell) {
    e /= v.eps;
    m *= v.mu;
  }
  return {c6_prefactor * e, c6_prefactor * m};
}

IntegrandTerms c3_integrand_terms(double radius, double eps1, double mu1, double eps, double mu,
                                  StressChoice choice) noexcept {
  // alpha*/(eps0 eps^q) = a eps^(1-q), mu0 mu^q beta* = b mu^(q-1)
  double e = reduced_excess(radius, eps1, eps);
  double m = reduced_excess(radius, mu1, mu);
  if (choice == StressChoice::Maxwell) {
    e /= eps;
    m *= mu;
  }
  return {c3_prefactor * e, -c3_prefactor * m};
}

namespace {

LocalResponse local_response(const SphereSpec& s1, const SphereSpec& s2, const MediumSpec& m,
                             double xi) {
  return {s1.permittivity.value(xi), s1.permeability.value(xi),
          s2.permittivity.value(xi), s2.permeability.value(xi),
          m.permittivity.value(xi),  m.permeability.value(xi)};
}

} // namespace

IntegrandTerms c6_integrand_split(const SphereSpec& s1, const SphereSpec& s2, const MediumSpec& m,
                                  StressChoice choice, double xi) {
  return c6_integrand_terms(s1.radius, s2.radius, local_response(s1, s2, m, xi), choice);
}

double c6_integrand(const SphereSpec& s1, const SphereSpec& s2, const MediumSpec& m,
                    StressChoice choice, double xi) {
  return c6_integrand_split(s1, s2, m, choice, xi).total();
}

double frequency_scale(const TwoSphereSystem& sys, const QuadratureSpec& quad) {
  return scale_from({&sys.medium.permittivity, &sys.medium.permeability,
                     &sys.sphere1.permittivity, &sys.sphere1.permeability,
                     &sys.sphere2.permittivity, &sys.sphere2.permeability},
                    quad);
}

double frequency_scale(const SphereSpec& s, const MediumSpec& m, const QuadratureSpec& quad) {
  return scale_from(
      {&m.permittivity, &m.permeability, &s.permittivity, &s.permeability}, quad);
}

C6Breakdown c6(const TwoSphereSystem& sys, StressChoice choice, const QuadratureSpec& quad) {
  sys.validate();
  quad.validate();
  const double scale = frequency_scale(sys, quad);
  require_decay<6>({&sys.medium.permittivity, &sys.medium.permeability,
                    &sys.sphere1.permittivity, &sys.sphere1.permeability,
                    &sys.sphere2.permittivity, &sys.sphere2.permeability},
                   {"medium permittivity", "medium permeability", "sphere1 permittivity",
                    "sphere1 permeability", "sphere2 permittivity", "sphere2 permeability"},
                   scale);

  const auto& s1 = sys.sphere1;
  const auto& s2 = sys.sphere2;
  const auto& m = sys.medium;
  const auto electric = integrate_semiinfinite(
      [&](double xi) {
        return c6_integrand_terms(s1.radius, s2.radius,
                                  {s1.permittivity.value(xi), 1.0, s2.permittivity.value(xi),
                                   1.0, m.permittivity.value(xi), 1.0},
                                  choice)
            .electric;
      },
      quad, scale);
  const auto magnetic = integrate_semiinfinite(
      [&](double xi) {
        return c6_integrand_terms(s1.radius, s2.radius,
                                  {1.0, s1.permeability.value(xi), 1.0,
                                   s2.permeability.value(xi), 1.0, m.permeability.value(xi)},
                                  choice)
            .magnetic;
      },
      quad, scale);

  C6Breakdown out;
  out.electric_term = positive_zero(electric.value);
  out.magnetic_term = positive_zero(magnetic.value);
  out.total = out.electric_term + out.magnetic_term;
  out.quadrature_error_estimate = electric.error + magnetic.error;
  return out;
}

double potential(double c6_total, double separation) {
  if (!(separation > 0.0))
    throw InvalidArgument("separation must be > 0");
  return c6_total / std::pow(separation, 6);
}

double force_magnitude(double c6_total, double separation) {
  if (!(separation > 0.0))
    throw InvalidArgument("separation must be > 0");
  return 6.0 * c6_total / std::pow(separation, 7);
}

double c3_integrand(const SphereSpec& s, const MediumSpec& m, StressChoice choice, double xi) {
  return c3_integrand_terms(s.radius, s.permittivity.value(xi), s.permeability.value(xi),
                            m.permittivity.value(xi), m.permeability.value(xi), choice)
      .total();
}

C3Breakdown c3(const SphereSpec& s, const MediumSpec& m, StressChoice choice,
               const QuadratureSpec& quad) {
  s.validate();
  quad.validate();
  const double scale = frequency_scale(s, m, quad);
  require_decay<4>({&m.permittivity, &m.permeability, &s.permittivity, &s.permeability},
                   {"medium permittivity", "medium permeability", "sphere permittivity",
                    "sphere permeability"},
                   scale);

  const auto electric = integrate_semiinfinite(
      [&](double xi) {
        return c3_integrand_terms(s.radius, s.permittivity.value(xi), 1.0,
                                  m.permittivity.value(xi), 1.0, choice)
            .electric;
      },
      quad, scale);
  const auto magnetic = integrate_semiinfinite(
      [&](double xi) {
        return c3_integrand_terms(s.radius, 1.0, s.permeability.value(xi), 1.0,
                                  m.permeability.value(xi), choice)
            .magnetic;
      },
      quad, scale);

  C3Breakdown out;
  out.electric_term = positive_zero(electric.value);
  out.magnetic_term = positive_zero(magnetic.value);
  out.total = out.electric_term + out.magnetic_term;
  out.quadrature_error_estimate = electric.error + magnetic.error;
  return out;
}

TwoSphereSystem duality_transform(const TwoSphereSystem& sys) {
  TwoSphereSystem dual = sys;
  std::swap(dual.medium.permittivity, dual.medium.permeability);
  std::swap(dual.sphere1.permittivity, dual.sphere1.permeability);
  std::swap(dual.sphere2.permittivity, dual.sphere2.permeability);
  return dual;
}

QuadratureResult c6_molecular(const MolecularPolarisability& alpha1,
                              const MolecularPolarisability& alpha2, const MediumSpec& m,
                              StressChoice choice, const QuadratureSpec& quad) {
  quad.validate();
  const int power = choice == StressChoice::Abraham ? 2 : 3;
  double scale = quad.scale.value_or(0.0);
  if (!quad.scale) {
    double strongest = -1.0;
    for (const auto* a : {&alpha1, &alpha2})
      for (const auto& t : a->terms())
        if (t.static_value > strongest) {
          strongest = t.static_value;
          scale = t.resonance;
        }
    if (strongest <= 0.0)
      scale = default_frequency_scale;
  }
  require_decay<1>({&m.permittivity}, {"medium permittivity"}, scale);
  return integrate_semiinfinite(
      [&](double xi) {
        const double eps = m.permittivity.value(xi);
        return c6_prefactor * alpha1(xi) * alpha2(xi) /
               (epsilon0 * epsilon0 * std::pow(eps, power));
      },
      quad, scale);
}

} // namespace dispmed
