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

#include "doctest.h"

#include <cmath>
#include <random>

#include "dispmed/constants.hpp"
#include "dispmed/errors.hpp"
#include "dispmed/material.hpp"

using namespace dispmed;

TEST_CASE("oscillator rejects unphysical parameters") {
  CHECK_THROWS_AS(Oscillator(-1.0, 1e16, 0.0), InvalidArgument);
  CHECK_THROWS_AS(Oscillator(1e16, 0.0, 0.0), InvalidArgument);
  CHECK_THROWS_AS(Oscillator(1e16, 1e16, -1.0), InvalidArgument);
  CHECK_THROWS_AS(Oscillator(NAN, 1e16, 0.0), InvalidArgument);
  CHECK_NOTHROW(Oscillator(0.0, 1e16, 0.0));
}

TEST_CASE("eval_response examples") {
  const auto vac = ResponseFunction::constant(1.0);
  for (double xi : {0.0, 1e10, 1e16, 1e25})
    CHECK(eval_response(vac, xi) == 1.0);

  const auto one = ResponseFunction::oscillators({Oscillator(1e16, 1e16, 0.0)});
  CHECK(eval_response(one, 0.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(eval_response(one, 1e16) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(eval_response(one, 1e24) == doctest::Approx(1.0).epsilon(1e-15));

  CHECK_THROWS_AS(eval_response(one, -1.0), InvalidArgument);
  CHECK_THROWS_AS(ResponseFunction::constant(0.5), InvalidArgument);
}

TEST_CASE("susceptibility examples") {
  CHECK(susceptibility(ResponseFunction::constant(1.0), 3e15) == 0.0);
  const auto one = ResponseFunction::oscillators({Oscillator(1e16, 1e16, 0.0)});
  CHECK(susceptibility(one, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(susceptibility(one, 1e30) < 1e-27);
}

TEST_CASE("oscillator sums are non-increasing and bounded below by 1") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> lg(13.0, 17.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Oscillator> terms;
    for (int k = 0; k < 3; ++k)
      terms.emplace_back(std::pow(10.0, lg(rng)), std::pow(10.0, lg(rng)),
                         k == 0 ? 0.0 : std::pow(10.0, lg(rng) - 1.0));
    const auto r = ResponseFunction::oscillators(terms);
    double prev = r.value(0.0);
    for (double xi = 1e12; xi < 1e20; xi *= 1.7) {
      const double v = r.value(xi);
      CHECK(v <= prev);
      CHECK(v >= 1.0);
      prev = v;
    }
  }
}

TEST_CASE("constant round trip") {
  for (double chi : {0.0, 1e-6, 0.37, 4.0, 80.0})
    for (double xi : {0.0, 1e14, 1e18})
      CHECK(susceptibility(ResponseFunction::constant(1.0 + chi), xi) ==
            doctest::Approx(chi).epsilon(1e-14));
}

TEST_CASE("clausius_mossotti_dilute") {
  const auto pol = MolecularPolarisability::lorentz(epsilon0 * 1e-30, 1e16);
  CHECK(clausius_mossotti_dilute({0.0, pol}, 0.0) == 0.0);
  CHECK(clausius_mossotti_dilute({1e27, pol}, 0.0) == doctest::Approx(1e-3).epsilon(1e-14));

  // Linear in density and in alpha.
  const auto pol3 = MolecularPolarisability::lorentz(3.0 * epsilon0 * 1e-30, 1e16);
  for (double xi : {0.0, 5e15, 3e16}) {
    const double base = clausius_mossotti_dilute({1e27, pol}, xi);
    CHECK(clausius_mossotti_dilute({2.5e27, pol}, xi) == doctest::Approx(2.5 * base).epsilon(1e-14));
    CHECK(clausius_mossotti_dilute({1e27, pol3}, xi) == doctest::Approx(3.0 * base).epsilon(1e-14));
  }

  // chi fed back through a constant response round-trips.
  const double chi = clausius_mossotti_dilute({1e27, pol}, 0.0);
  CHECK(susceptibility(ResponseFunction::constant(1.0 + chi), 1e15) ==
        doctest::Approx(chi).epsilon(1e-12));

  CHECK_THROWS_AS(clausius_mossotti_dilute({-1.0, pol}, 0.0), InvalidArgument);
}

TEST_CASE("validate_decay") {
  CHECK(validate_decay(ResponseFunction::constant(1.0), 1e19));
  CHECK_FALSE(validate_decay(ResponseFunction::constant(2.0), 1e19));
  const auto one = ResponseFunction::oscillators({Oscillator(1e16, 1e16, 0.0)});
  CHECK(validate_decay(one, 1e19));
  CHECK_FALSE(validate_decay(one, 1e16));
  CHECK_THROWS_AS(validate_decay(one, 0.0), InvalidArgument);

  const auto strict = ResponseFunction::tabulated({1e14, 1e15, 1e16}, {3.0, 2.0, 1.5},
                                                  Extrapolation::Error);
  CHECK_FALSE(validate_decay(strict, 1e19));
}

TEST_CASE("tabulated response") {
  const std::vector<double> xi{1e13, 1e14, 1e15, 1e16, 1e17};
  const std::vector<double> val{4.0, 3.5, 2.5, 1.3, 1.01};
  const auto r = ResponseFunction::tabulated(xi, val);

  SUBCASE("reproduces samples and extends") {
    for (std::size_t k = 0; k < xi.size(); ++k)
      CHECK(r.value(xi[k]) == doctest::Approx(val[k]).epsilon(1e-14));
    CHECK(r.value(0.0) == 4.0);
    CHECK(r.value(5e17) == 1.0);
  }
  SUBCASE("monotone between samples") {
    double prev = r.value(1e13);
    for (double x = 1e13; x <= 1e17; x *= 1.05) {
      const double v = r.value(x);
      CHECK(v <= prev + 1e-15);
      CHECK(v >= 1.0);
      prev = v;
    }
  }
  SUBCASE("error rule") {
    const auto strict = ResponseFunction::tabulated(xi, val, Extrapolation::Error);
    CHECK_THROWS_AS(strict.value(2e17), RangeError);
    CHECK(strict.value(1e17) == doctest::Approx(1.01));
  }
  SUBCASE("short tables interpolate linearly in log xi") {
    const auto two = ResponseFunction::tabulated({1e14, 1e16}, {3.0, 1.0});
    CHECK(two.value(1e15) == doctest::Approx(2.0).epsilon(1e-14));
  }
  SUBCASE("construction errors") {
    CHECK_THROWS_AS(ResponseFunction::tabulated({1e14, 1e15}, {2.0, 3.0}), InvalidArgument);
    CHECK_THROWS_AS(ResponseFunction::tabulated({1e15, 1e14}, {3.0, 2.0}), InvalidArgument);
    CHECK_THROWS_AS(ResponseFunction::tabulated({1e14, 1e15}, {2.0, 0.9}), InvalidArgument);
    CHECK_THROWS_AS(ResponseFunction::tabulated({0.0, 1e15}, {2.0, 1.5}), InvalidArgument);
    CHECK_THROWS_AS(ResponseFunction::tabulated({1e14}, {2.0}), InvalidArgument);
  }
}

TEST_CASE("scaled susceptibility") {
  const auto r = ResponseFunction::oscillators({Oscillator(2e16, 1e16, 1e14), Oscillator(5e15, 3e15, 0.0)});
  for (double s : {0.0, 0.25, 1.0, 3.0})
    for (double xi : {0.0, 1e15, 4e16})
      CHECK(r.scaled(s).susceptibility(xi) == doctest::Approx(s * r.susceptibility(xi)).epsilon(1e-13));
  CHECK(ResponseFunction::constant(3.0).scaled(0.5).value(0.0) == 2.0);
  CHECK(r.scaled(0.0).susceptibility(0.0) == 0.0);
  CHECK_THROWS_AS(r.scaled(-1.0), InvalidArgument);
}

TEST_CASE("dominant resonance") {
  const auto r = ResponseFunction::oscillators({Oscillator(2e15, 1e14, 0.0), Oscillator(3e16, 7e15, 0.0)});
  CHECK(r.dominant_resonance().value() == 7e15);
  CHECK_FALSE(ResponseFunction::constant(2.0).dominant_resonance());
}
