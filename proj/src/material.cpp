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

#include "dispmed/material.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

// Boost 1.74's pchip calls unqualified isnan; <math.h> puts it in scope.
#include <math.h>

#include <boost/math/interpolators/pchip.hpp>

#include "dispmed/constants.hpp"
#include "dispmed/errors.hpp"

namespace dispmed {

namespace {

void require_frequency(double xi) {
  if (!(xi >= 0.0))
    throw InvalidArgument("imaginary frequency must be >= 0");
}

bool finite_nonneg(double v) { return std::isfinite(v) && v >= 0.0; }

} // namespace

Oscillator::Oscillator(double plasma_strength, double resonance, double damping)
    : plasma_strength_(plasma_strength), resonance_(resonance), damping_(damping) {
  if (!finite_nonneg(plasma_strength) || !(std::isfinite(resonance) && resonance > 0.0) ||
      !finite_nonneg(damping)) {
    std::ostringstream ss;
    ss << "invalid oscillator (wp=" << plasma_strength << ", w0=" << resonance
       << ", gamma=" << damping << "): need wp >= 0, w0 > 0, gamma >= 0";
    throw InvalidArgument(ss.str());
  }
}

// Monotone cubic in log(xi). Boost's pchip needs four points; shorter tables
// fall back to linear interpolation in log(xi).
struct ResponseFunction::Interpolant {
  std::vector<double> logxi;
  std::vector<double> value;
  std::optional<boost::math::interpolators::pchip<std::vector<double>>> cubic;

  double operator()(double xi) const {
    const double t = std::log(xi);
    if (cubic)
      return (*cubic)(t);
    auto it = std::upper_bound(logxi.begin(), logxi.end(), t);
    const auto k = static_cast<std::size_t>(std::distance(logxi.begin(), it)) - 1;
    const double w = (t - logxi[k]) / (logxi[k + 1] - logxi[k]);
    return value[k] + w * (value[k + 1] - value[k]);
  }
};

ResponseFunction::ResponseFunction() : model_(Constant{1.0}) {}

ResponseFunction::ResponseFunction(Model m) : model_(std::move(m)) {
  if (auto* tab = std::get_if<Tabulated>(&model_)) {
    auto ip = std::make_shared<Interpolant>();
    for (double x : tab->xi)
      ip->logxi.push_back(std::log(x));
    ip->value = tab->value;
    if (tab->xi.size() >= 4) {
      auto x = ip->logxi;
      auto y = ip->value;
      ip->cubic.emplace(std::move(x), std::move(y));
    }
    interp_ = std::move(ip);
  }
}

ResponseFunction ResponseFunction::constant(double value) {
  if (!(std::isfinite(value) && value >= 1.0))
    throw InvalidArgument("constant response must be finite and >= 1");
  return ResponseFunction(Constant{value});
}

ResponseFunction ResponseFunction::oscillators(std::vector<Oscillator> terms) {
  return ResponseFunction(OscillatorSum{std::move(terms)});
}

ResponseFunction ResponseFunction::tabulated(std::vector<double> xi, std::vector<double> value,
                                             Extrapolation rule) {
  if (xi.size() != value.size())
    throw InvalidArgument("tabulated response: abscissa and value counts differ");
  if (xi.size() < 2)
    throw InvalidArgument("tabulated response needs at least two samples");
  for (std::size_t k = 0; k < xi.size(); ++k) {
    if (!(std::isfinite(xi[k]) && xi[k] > 0.0))
      throw InvalidArgument("tabulated response: sample frequencies must be finite and > 0");
    if (!(std::isfinite(value[k]) && value[k] >= 1.0))
      throw InvalidArgument("tabulated response: values must be finite and >= 1");
    if (k > 0 && !(xi[k] > xi[k - 1]))
      throw InvalidArgument("tabulated response: frequencies must be strictly increasing");
    if (k > 0 && value[k] > value[k - 1])
      throw InvalidArgument("tabulated response: values must be non-increasing in frequency");
  }
  return ResponseFunction(Tabulated{std::move(xi), std::move(value), rule});
}

double ResponseFunction::value(double xi) const {
  require_frequency(xi);
  return std::visit(
      [&](const auto& m) -> double {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, Constant>) {
          return m.value;
        } else if constexpr (std::is_same_v<T, OscillatorSum>) {
          double chi = 0.0;
          for (const auto& o : m.terms)
            chi += o.susceptibility(xi);
          return 1.0 + chi;
        } else {
          if (xi <= m.xi.front())
            return m.value.front();
          if (xi > m.xi.back()) {
            if (m.rule == Extrapolation::ClampToUnity)
              return 1.0;
            std::ostringstream ss;
            ss << "tabulated response queried at xi=" << xi << " beyond last sample "
               << m.xi.back();
            throw RangeError(ss.str());
          }
          if (xi == m.xi.back())
            return m.value.back();
          // Cubic overshoot is impossible for monotone data, but keep the
          // invariant against rounding.
          return std::max(1.0, (*interp_)(xi));
        }
      },
      model_);
}

ResponseFunction ResponseFunction::scaled(double s) const {
  if (!(std::isfinite(s) && s >= 0.0))
    throw InvalidArgument("susceptibility scale factor must be finite and >= 0");
  return std::visit(
      [&](const auto& m) -> ResponseFunction {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, Constant>) {
          return constant(1.0 + s * (m.value - 1.0));
        } else if constexpr (std::is_same_v<T, OscillatorSum>) {
          std::vector<Oscillator> terms;
          terms.reserve(m.terms.size());
          for (const auto& o : m.terms)
            terms.emplace_back(std::sqrt(s) * o.plasma_strength(), o.resonance(), o.damping());
          return oscillators(std::move(terms));
        } else {
          auto v = m.value;
          for (auto& x : v)
            x = 1.0 + s * (x - 1.0);
          return tabulated(m.xi, std::move(v), m.rule);
        }
      },
      model_);
}

std::optional<double> ResponseFunction::dominant_resonance() const {
  const auto* sum = std::get_if<OscillatorSum>(&model_);
  if (!sum)
    return std::nullopt;
  std::optional<double> best;
  double strength = 0.0;
  for (const auto& o : sum->terms) {
    if (o.plasma_strength() > strength) {
      strength = o.plasma_strength();
      best = o.resonance();
    }
  }
  return best;
}

std::optional<double> ResponseFunction::characteristic_frequency() const {
  if (const auto* sum = std::get_if<OscillatorSum>(&model_)) {
    std::optional<double> top;
    for (const auto& o : sum->terms)
      if (o.plasma_strength() > 0.0)
        top = std::max(top.value_or(0.0), o.resonance());
    return top;
  }
  if (const auto* tab = std::get_if<Tabulated>(&model_))
    return tab->xi.back();
  return std::nullopt;
}

MolecularPolarisability::MolecularPolarisability(std::vector<Term> terms) : terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    if (!finite_nonneg(t.static_value) || !(std::isfinite(t.resonance) && t.resonance > 0.0) ||
        !finite_nonneg(t.damping))
      throw InvalidArgument("molecular polarisability term needs alpha0 >= 0, w0 > 0, gamma >= 0");
  }
}

MolecularPolarisability MolecularPolarisability::lorentz(double static_value, double resonance,
                                                         double damping) {
  return MolecularPolarisability({Term{static_value, resonance, damping}});
}

double MolecularPolarisability::operator()(double xi) const {
  require_frequency(xi);
  double a = 0.0;
  for (const auto& t : terms_)
    a += t.static_value * t.resonance * t.resonance /
         (t.resonance * t.resonance + t.damping * xi + xi * xi);
  return a;
}

double eval_response(const ResponseFunction& r, double xi) { return r.value(xi); }

double susceptibility(const ResponseFunction& r, double xi) { return r.susceptibility(xi); }

double clausius_mossotti_dilute(const MolecularSpecies& s, double xi) {
  if (!finite_nonneg(s.number_density))
    throw InvalidArgument("number density must be >= 0");
  return s.number_density * s.polarisability(xi) / epsilon0;
}

bool validate_decay(const ResponseFunction& r, double xi_max) {
  if (!(xi_max > 0.0))
    throw InvalidArgument("decay horizon must be > 0");
  const double chi0 = r.susceptibility(0.0);
  if (chi0 == 0.0)
    return true;
  try {
    return r.susceptibility(xi_max) < 1e-3 * chi0;
  } catch (const RangeError&) {
    return false;
  }
}

} // namespace dispmed
