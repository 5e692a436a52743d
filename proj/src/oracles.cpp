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

#include "dispmed/oracles.hpp"

#include <cmath>
#include <random>
#include <thread>
#include <vector>

#include "dispmed/constants.hpp"
#include "dispmed/errors.hpp"
#include "dispmed/microscopic.hpp"

namespace dispmed {

// ---------------------------------------------------------------------------
// Hamaker pair summation

namespace {

struct CellCloud {
  std::vector<double> x, y, z;
};

// Cell centres at (i + 1/2) pitch, in pitch units, relative to the sphere
// centre. With `quadrant` only cells with x > 0 and y > 0 are kept.
CellCloud sphere_cells(double radius_in_pitch, bool quadrant) {
  CellCloud c;
  const auto n = static_cast<long>(std::ceil(radius_in_pitch)) + 1;
  const double r2 = radius_in_pitch * radius_in_pitch;
  for (long i = -n; i < n; ++i) {
    const double x = static_cast<double>(i) + 0.5;
    if (quadrant && x < 0.0)
      continue;
    for (long j = -n; j < n; ++j) {
      const double y = static_cast<double>(j) + 0.5;
      if (quadrant && y < 0.0)
        continue;
      for (long k = -n; k < n; ++k) {
        const double z = static_cast<double>(k) + 0.5;
        if (x * x + y * y + z * z <= r2) {
          c.x.push_back(x);
          c.y.push_back(y);
          c.z.push_back(z);
        }
      }
    }
  }
  return c;
}

} // namespace

double hamaker_lattice_sum(double radius1, double radius2, double separation, double pitch) {
  if (!(radius1 > 0.0 && radius2 > 0.0))
    throw InvalidArgument("sphere radii must be > 0");
  if (!(pitch > 0.0 && pitch <= std::min(radius1, radius2) / 10.0))
    throw InvalidArgument("lattice pitch must be > 0 and <= min(R1, R2)/10");
  if (!(separation > radius1 + radius2))
    throw InvalidArgument("sphere separation must exceed the sum of the radii");

  // Both grids are mirror symmetric in x and y, so sphere 1 is reduced to
  // the x > 0, y > 0 quadrant and the sum multiplied by 4.
  const auto s1 = sphere_cells(radius1 / pitch, true);
  const auto s2 = sphere_cells(radius2 / pitch, false);
  const double offset = separation / pitch;
  const std::size_t n2 = s2.x.size();

  double total = 0.0;
  for (std::size_t i = 0; i < s1.x.size(); ++i) {
    const double xi = s1.x[i], yi = s1.y[i], zi = s1.z[i] - offset;
    double row = 0.0;
    for (std::size_t j = 0; j < n2; ++j) {
      const double dx = s2.x[j] - xi, dy = s2.y[j] - yi, dz = s2.z[j] - zi;
      const double d2 = dx * dx + dy * dy + dz * dz;
      row += 1.0 / (d2 * d2 * d2);
    }
    total += row;
  }
  return 4.0 * total;
}

double hamaker_sphere_geometry(double radius1, double radius2, double separation) {
  if (!(radius1 > 0.0 && radius2 > 0.0 && separation > radius1 + radius2))
    throw InvalidArgument("need R1, R2 > 0 and separation > R1 + R2");
  // The ball integral of d^-6 at external distance s is V1/(s^2 - R1^2)^3.
  // Averaging it over a shell of radius t around sphere 2 gives
  // A/((A-B)(A+B))^2 with A = r^2 + t^2 - R1^2, B = 2 r t.
  const double r = separation;
  const double v1 = 4.0 * pi * std::pow(radius1, 3) / 3.0;
  const double rr1 = radius1 * radius1;
  const auto shell = [&](double u) {
    const double t = u * radius2;
    const double a = r * r + t * t - rr1;
    const double lo = (r - t) * (r - t) - rr1;
    const double hi = (r + t) * (r + t) - rr1;
    return 4.0 * pi * t * t * v1 * a / (lo * lo * hi * hi) * radius2;
  };
  return gauss_composite_unit(shell, 8);
}

double lattice_volume_error_bound(double radius, double pitch) {
  const double h = 0.5 * std::sqrt(3.0) * pitch;
  const double inner = std::max(radius - h, 0.0);
  return (std::pow(radius + h, 3) - std::pow(inner, 3)) / std::pow(radius, 3);
}

// ---------------------------------------------------------------------------
// Three-body medium integral

void MonteCarloSpec::validate() const {
  if (samples < 1)
    throw InvalidArgument("Monte Carlo needs at least one sample");
  if (chunks < 2)
    throw InvalidArgument("Monte Carlo needs at least two chunks for a standard error");
  if (chunks > samples)
    throw InvalidArgument("Monte Carlo chunk count exceeds sample count");
}

double at_medium_point_limit(double separation) {
  return 8.0 * pi / (3.0 * std::pow(separation, 6));
}

namespace {

// Open interval (0, 1), independent of the standard library's distributions.
double uniform01(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

// Radial law around one sphere centre, lengths in units of the separation:
// log-uniform on [a, 1] (3-D density ~ rho^-3, like the kernel near a
// vertex) and a Pareto tail rho^-4 beyond 1 (3-D density ~ rho^-6, like the
// kernel far away). Continuous at rho = 1.
struct RadialLaw {
  double inner;
  double log_span;
  double p_inner;

  explicit RadialLaw(double a) : inner(a), log_span(std::log(1.0 / a)) {
    p_inner = 3.0 * log_span / (1.0 + 3.0 * log_span);
  }

  double sample(std::mt19937_64& rng) const {
    const double pick = uniform01(rng);
    const double u = uniform01(rng);
    if (pick < p_inner)
      return inner * std::exp(u * log_span);
    return std::cbrt(1.0 / u);
  }

  // Density per unit volume at distance rho from the centre.
  double density(double rho) const {
    if (rho < inner)
      return 0.0;
    const double g = rho <= 1.0 ? p_inner / (rho * log_span)
                                : (1.0 - p_inner) * 3.0 / (rho * rho * rho * rho);
    return g / (4.0 * pi * rho * rho);
  }
};

Vec3 random_direction(std::mt19937_64& rng) {
  const double c = 2.0 * uniform01(rng) - 1.0;
  const double phi = 2.0 * pi * uniform01(rng);
  const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
  return {s * std::cos(phi), s * std::sin(phi), c};
}

double chunk_sum(std::uint64_t seed, std::uint64_t chunk, std::uint64_t count, double a1,
                 double a2) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(chunk), static_cast<std::uint32_t>(chunk >> 32)};
  std::mt19937_64 rng(seq);
  const RadialLaw law1(a1), law2(a2);
  const Vec3 c1{0.0, 0.0, 0.0}, c2{0.0, 0.0, 1.0};

  double sum = 0.0;
  for (std::uint64_t n = 0; n < count; ++n) {
    const bool first = uniform01(rng) < 0.5;
    const RadialLaw& law = first ? law1 : law2;
    const double rho = law.sample(rng);
    const Vec3 dir = random_direction(rng);
    const Vec3& centre = first ? c1 : c2;
    const Vec3 s{centre.x + rho * dir.x, centre.y + rho * dir.y, centre.z + rho * dir.z};

    const Vec3 d1 = s - c1, d2 = s - c2;
    const double rho1 = std::sqrt(dot(d1, d1));
    const double rho2 = std::sqrt(dot(d2, d2));
    if (rho1 < a1 || rho2 < a2)
      continue; // inside a sphere: not medium
    const double pdf = 0.5 * law1.density(rho1) + 0.5 * law2.density(rho2);
    sum += at_kernel({{c1, c2, s}}) / pdf;
  }
  return sum;
}

} // namespace

MonteCarloResult at_medium_mc(double separation, double radius1, double radius2,
                              const MonteCarloSpec& mc, unsigned workers) {
  mc.validate();
  if (!(radius1 > 0.0 && radius2 > 0.0 && separation > radius1 + radius2))
    throw InvalidArgument("need R1, R2 > 0 and separation > R1 + R2");

  const double a1 = radius1 / separation, a2 = radius2 / separation;
  const std::uint64_t chunks = mc.chunks;
  const std::uint64_t base = mc.samples / chunks, extra = mc.samples % chunks;
  const auto count = [&](std::uint64_t c) { return base + (c < extra ? 1 : 0); };

  std::vector<double> sums(chunks, 0.0);
  const auto run = [&](unsigned w, unsigned stride) {
    for (std::uint64_t c = w; c < chunks; c += stride)
      sums[c] = chunk_sum(mc.seed, c, count(c), a1, a2);
  };
  workers = std::max(1u, std::min<unsigned>(workers, mc.chunks));
  if (workers == 1) {
    run(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back(run, w, workers);
  }

  double total = 0.0;
  for (double s : sums)
    total += s;
  const double n = static_cast<double>(mc.samples);
  const double mean = total / n;
  double spread = 0.0;
  for (std::uint64_t c = 0; c < chunks; ++c) {
    const double nc = static_cast<double>(count(c));
    const double dev = sums[c] / nc - mean;
    spread += nc * dev * dev;
  }
  const double se = std::sqrt(spread / (static_cast<double>(chunks - 1) * n));

  const double unit = std::pow(separation, 6);
  return {mean / unit, se / unit};
}

// ---------------------------------------------------------------------------
// Susceptibility expansion

double hamaker_monomial_scale(double radius1, double radius2) noexcept {
  return hbar * std::pow(radius1, 3) * std::pow(radius2, 3) / (3.0 * pi);
}

double threeparticle_monomial_scale(double radius1, double radius2) noexcept {
  return 2.0 * hbar * std::pow(radius1, 3) * std::pow(radius2, 3) / (9.0 * pi);
}

namespace {

struct Stencil {
  double c12, c1m, c2m, cmm, c12m;
};

Stencil differences(double r1, double r2, StressChoice choice, double h) {
  const auto f = [&](double x1, double x2, double x) {
    return c6_integrand_terms(r1, r2, {1.0 + x1, 1.0, 1.0 + x2, 1.0, 1.0 + x, 1.0}, choice)
        .total();
  };
  const double h2 = h * h;
  Stencil s;
  s.c12 = (f(h, h, 0) - f(h, -h, 0) - f(-h, h, 0) + f(-h, -h, 0)) / (4.0 * h2);
  s.c1m = (f(h, 0, h) - f(h, 0, -h) - f(-h, 0, h) + f(-h, 0, -h)) / (4.0 * h2);
  s.c2m = (f(0, h, h) - f(0, h, -h) - f(0, -h, h) + f(0, -h, -h)) / (4.0 * h2);
  s.cmm = (f(0, 0, h) - 2.0 * f(0, 0, 0) + f(0, 0, -h)) / (2.0 * h2);
  double third = 0.0;
  for (int a : {-1, 1})
    for (int b : {-1, 1})
      for (int c : {-1, 1})
        third += a * b * c * f(a * h, b * h, c * h);
  s.c12m = third / (8.0 * h2 * h);
  return s;
}

} // namespace

ExpansionReport expand_c6_integrand(double radius1, double radius2, StressChoice choice,
                                    double h) {
  if (!(h > 0.0 && h <= 1e-2))
    throw InvalidArgument("finite-difference step must lie in (0, 1e-2]");
  if (!(radius1 > 0.0 && radius2 > 0.0))
    throw InvalidArgument("sphere radii must be > 0");

  // Every stencil has an even error series, so one Richardson step removes
  // the h^2 term.
  const Stencil coarse = differences(radius1, radius2, choice, h);
  const Stencil fine = differences(radius1, radius2, choice, 0.5 * h);
  const auto extrapolate = [](double c, double f) { return (4.0 * f - c) / 3.0; };

  ExpansionReport r;
  r.choice = choice;
  r.chi1_chi2 = extrapolate(coarse.c12, fine.c12);
  r.chi1_chi = extrapolate(coarse.c1m, fine.c1m);
  r.chi2_chi = extrapolate(coarse.c2m, fine.c2m);
  r.chi_chi = extrapolate(coarse.cmm, fine.cmm);
  r.chi1_chi2_chi = extrapolate(coarse.c12m, fine.c12m);
  r.error = {std::abs(r.chi1_chi2 - fine.c12), std::abs(r.chi1_chi - fine.c1m),
             std::abs(r.chi2_chi - fine.c2m), std::abs(r.chi_chi - fine.cmm),
             std::abs(r.chi1_chi2_chi - fine.c12m)};
  r.third_order_ratio = r.chi1_chi2_chi / threeparticle_monomial_scale(radius1, radius2);
  return r;
}

ConsistencyReport verify_consistency(StressChoice choice, double h, double radius1,
                                     double radius2) {
  ConsistencyReport out;
  out.expansion = expand_c6_integrand(radius1, radius2, choice, h);
  const double s = hamaker_monomial_scale(radius1, radius2);
  const auto& e = out.expansion;
  out.degree2_deviation = {std::abs(e.chi1_chi2 + s) / s, std::abs(e.chi1_chi - s) / s,
                           std::abs(e.chi2_chi - s) / s, std::abs(e.chi_chi + s) / s};
  out.hamaker_match = true;
  for (double d : out.degree2_deviation)
    out.hamaker_match = out.hamaker_match && d <= degree2_tolerance;
  out.three_particle_match = std::abs(e.third_order_ratio - 1.0) <= third_order_tolerance;
  return out;
}

} // namespace dispmed
