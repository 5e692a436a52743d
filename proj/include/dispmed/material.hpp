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

#include <memory>
#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace dispmed {

/// One Drude-Lorentz term, evaluated on the imaginary axis as
/// wp^2 / (w0^2 + gamma*xi + xi^2). All frequencies in rad/s.
class Oscillator {
public:
  Oscillator(double plasma_strength, double resonance, double damping);

  double plasma_strength() const noexcept { return plasma_strength_; }
  double resonance() const noexcept { return resonance_; }
  double damping() const noexcept { return damping_; }

  double susceptibility(double xi) const noexcept {
    return plasma_strength_ * plasma_strength_ / (resonance_ * resonance_ + damping_ * xi + xi * xi);
  }

  bool operator==(const Oscillator&) const = default;

private:
  double plasma_strength_;
  double resonance_;
  double damping_;
};

enum class Extrapolation {
  ClampToUnity, // value is 1 beyond the last sample
  Error,        // querying beyond the last sample throws RangeError
};

/// A relative permittivity or permeability on the imaginary frequency axis.
/// Always real and >= 1 for xi >= 0. Immutable once built.
class ResponseFunction {
public:
  struct Constant {
    double value;
    bool operator==(const Constant&) const = default;
  };
  struct OscillatorSum {
    std::vector<Oscillator> terms;
    bool operator==(const OscillatorSum&) const = default;
  };
  struct Tabulated {
    std::vector<double> xi;
    std::vector<double> value;
    Extrapolation rule;
    bool operator==(const Tabulated& o) const {
      return xi == o.xi && value == o.value && rule == o.rule;
    }
  };

  // Vacuum, i.e. constant(1).
  ResponseFunction();

  static ResponseFunction constant(double value);
  static ResponseFunction oscillators(std::vector<Oscillator> terms);
  static ResponseFunction tabulated(std::vector<double> xi, std::vector<double> value,
                                    Extrapolation rule = Extrapolation::ClampToUnity);

  double value(double xi) const;
  double susceptibility(double xi) const { return value(xi) - 1.0; }

  /// Returns 1 + s*(r - 1): the response of the same material with its
  /// polarisable density scaled by s >= 0.
  ResponseFunction scaled(double s) const;

  /// Resonance of the strongest oscillator (largest wp^2), if any.
  std::optional<double> dominant_resonance() const;
  /// Largest frequency that characterises the model: top resonance or last
  /// tabulated abscissa. Empty for constants.
  std::optional<double> characteristic_frequency() const;

  const auto& model() const noexcept { return model_; }

  bool operator==(const ResponseFunction& o) const { return model_ == o.model_; }

private:
  using Model = std::variant<Constant, OscillatorSum, Tabulated>;
  explicit ResponseFunction(Model m);

  struct Interpolant;
  Model model_;
  std::shared_ptr<const Interpolant> interp_;
};

/// Molecular polarisability alpha(i xi) in C m^2/V as a sum of Lorentz terms
/// alpha_k * w_k^2 / (w_k^2 + gamma_k xi + xi^2), alpha_k the static value.
class MolecularPolarisability {
public:
  struct Term {
    double static_value;
    double resonance;
    double damping;
  };

  MolecularPolarisability() = default;
  explicit MolecularPolarisability(std::vector<Term> terms);
  static MolecularPolarisability lorentz(double static_value, double resonance, double damping = 0.0);

  double operator()(double xi) const;
  std::span<const Term> terms() const noexcept { return terms_; }

private:
  std::vector<Term> terms_;
};

struct MolecularSpecies {
  double number_density = 0.0; // 1/m^3
  MolecularPolarisability polarisability;
};

double eval_response(const ResponseFunction& r, double xi);
double susceptibility(const ResponseFunction& r, double xi);

/// Dilute Clausius-Mossotti: chi = eta * alpha / eps0.
double clausius_mossotti_dilute(const MolecularSpecies& s, double xi);

/// True when the susceptibility at xi_max has dropped below 1e-3 of its
/// static value, or is identically zero at xi = 0.
bool validate_decay(const ResponseFunction& r, double xi_max);

} // namespace dispmed
