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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>

#include "cli.hpp"

namespace dispmed::cli {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double duality_tolerance = 1e-10;
constexpr double vacuum_correspondence_tolerance = 1e-12;
constexpr double medium_correspondence_tolerance = 1e-8;
constexpr double hamaker_tolerance = 0.02;
constexpr double mc_relative_tolerance = 0.01;
constexpr double mc_sigma_tolerance = 3.0;
constexpr double quadrature_tolerance = 1e-9;
constexpr double exactness_tolerance = 1e-14;

std::vector<dm_stress> selected(Choices c) {
  switch (c) {
  case Choices::Abraham:
    return {DM_ABRAHAM};
  case Choices::Maxwell:
    return {DM_MAXWELL};
  default:
    return {DM_ABRAHAM, DM_MAXWELL};
  }
}

const char* name(dm_stress s) { return s == DM_ABRAHAM ? "Abraham" : "Maxwell"; }

dm_quadrature quadrature(const SystemConfig& cfg, const RunOptions& opt) {
  dm_quadrature q = cfg.quadrature;
  if (opt.tolerance)
    q.relative_tolerance = *opt.tolerance;
  return q;
}

double relative(double value, double reference) {
  if (value == reference)
    return 0.0;
  return std::abs(value - reference) / std::abs(reference);
}

void warn_regime(const SystemConfig& cfg, double r12, Streams io) {
  const double rmax = std::max(cfg.radius1, cfg.radius2);
  if (r12 < 5.0 * rmax)
    io.err << "warning: r12 = " << text_number(r12) << " m is below 5 max(R1, R2) = "
           << text_number(5.0 * rmax) << " m; the small-sphere formulas are asymptotic\n";
}

void emit(const Table& t, const RunOptions& opt, Streams io) {
  write_text(t, io.out);
  if (opt.output.empty())
    return;
  std::ofstream f(opt.output, std::ios::binary);
  if (!f)
    throw CliError(exit_other, "cannot write '" + opt.output + "'");
  write_csv(t, f);
  if (!f)
    throw CliError(exit_other, "failed writing '" + opt.output + "'");
}

const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

} // namespace

int cmd_c6(const SystemConfig& cfg, const RunOptions& opt, Streams io) {
  const double r12 = opt.r12.value_or(cfg.separation);
  const auto sys = cfg.build(r12);
  warn_regime(cfg, r12, io);
  const auto q = quadrature(cfg, opt);

  Table t{{"choice", "C6_electric [J m^6]", "C6_magnetic [J m^6]", "C6 [J m^6]",
           "C6_error [J m^6]", "r12 [m]", "U [J]", "F [N]"},
          {}};
  for (auto c : selected(opt.choices)) {
    dm_breakdown b;
    check(dm_c6(sys.get(), c, &q, &b), "c6");
    t.add({name(c), csv_number(b.electric), csv_number(b.magnetic), csv_number(b.total),
           csv_number(b.error), csv_number(r12), csv_number(dm_potential(b.total, r12)),
           csv_number(dm_force(b.total, r12))});
  }
  emit(t, opt, io);
  return exit_ok;
}

int cmd_c3(const SystemConfig& cfg, const RunOptions& opt, Streams io) {
  if (opt.sphere != 1 && opt.sphere != 2)
    throw CliError(exit_config, "--sphere must be 1 or 2");
  const auto sys = cfg.build();
  const auto q = quadrature(cfg, opt);

  Table t{{"choice", "sphere", "C3_electric [J m^3]", "C3_magnetic [J m^3]", "C3 [J m^3]",
           "C3_error [J m^3]"},
          {}};
  for (auto c : selected(opt.choices)) {
    dm_breakdown b;
    check(dm_c3(sys.get(), opt.sphere, c, &q, &b), "c3");
    t.add({name(c), std::to_string(opt.sphere), csv_number(b.electric), csv_number(b.magnetic),
           csv_number(b.total), csv_number(b.error)});
  }
  emit(t, opt, io);

  if (opt.choices == Choices::Both) {
    double a = 0.0, m = 0.0, eps = 0.0;
    check(dm_c3_integrand(sys.get(), opt.sphere, DM_ABRAHAM, 0.0, &a), "c3 integrand");
    check(dm_c3_integrand(sys.get(), opt.sphere, DM_MAXWELL, 0.0, &m), "c3 integrand");
    check(dm_system_medium_permittivity(sys.get(), 0.0, &eps), "medium");
    io.out << "integrand ratio Maxwell/Abraham at xi = 0: "
           << (a != 0.0 ? text_number(m / a) : std::string("n/a")) << " (1/eps = "
           << text_number(1.0 / eps) << ")\n";
  }
  return exit_ok;
}

int cmd_verify_duality(const SystemConfig& cfg, const RunOptions& opt, Streams io) {
  const auto sys = cfg.build();
  dm_system* raw = nullptr;
  check(dm_system_dual(sys.get(), &raw), "dual");
  const System dual(raw);
  const auto q = quadrature(cfg, opt);
  warn_regime(cfg, cfg.separation, io);

  Table t{{"choice", "C6_original [J m^6]", "C6_dual [J m^6]", "relative_delta", "invariant"}, {}};
  bool abraham_ok = true;
  for (auto c : selected(opt.choices)) {
    dm_breakdown a, b;
    check(dm_c6(sys.get(), c, &q, &a), "c6");
    check(dm_c6(dual.get(), c, &q, &b), "c6 dual");
    const double delta = a.total != 0.0 ? relative(b.total, a.total) : std::abs(b.total);
    const bool invariant = delta < duality_tolerance;
    if (c == DM_ABRAHAM)
      abraham_ok = invariant;
    t.add({name(c), csv_number(a.total), csv_number(b.total), csv_number(delta),
           invariant ? "yes" : "no"});
  }
  emit(t, opt, io);
  io.out << "duality (tolerance " << text_number(duality_tolerance) << "): "
         << verdict(abraham_ok) << " for the Abraham prescription\n";
  return abraham_ok ? exit_ok : exit_criterion;
}

int cmd_verify_correspondence(const SystemConfig& cfg, const RunOptions& opt, Streams io) {
  const Polarisability fallback = default_species();
  const dm_polarisability* a =
      cfg.species1.polarisability ? cfg.species1.polarisability.get() : fallback.get();
  const dm_polarisability* b =
      cfg.species2.polarisability ? cfg.species2.polarisability.get() : fallback.get();
  if (!cfg.species1.polarisability || !cfg.species2.polarisability)
    io.err << "note: no [species1]/[species2] polarisability given, using the default molecule\n";

  const auto q = quadrature(cfg, opt);
  const auto sys = cfg.build();
  dm_response* one_raw = nullptr;
  check(dm_response_constant(1.0, &one_raw), "vacuum");
  const Response one(one_raw);
  dm_system* vac_raw = nullptr;
  check(dm_system_create(cfg.radius1, one.get(), one.get(), cfg.radius2, one.get(), one.get(),
                         one.get(), one.get(), cfg.separation, &vac_raw),
        "vacuum system");
  const System vac(vac_raw);

  double vdw = 0.0, screened = 0.0;
  check(dm_vdw_coefficient(a, b, &q, &vdw), "vdw");
  check(dm_vdw_coefficient_in_medium(a, b, sys.get(), &q, &screened), "vdw in medium");

  Table t{{"medium", "choice", "C6_two_sphere [J m^6]", "C6_molecular [J m^6]", "relative_delta",
           "tolerance", "match"},
          {}};
  bool abraham_ok = true;
  for (auto c : selected(opt.choices)) {
    for (bool in_medium : {false, true}) {
      double two = 0.0;
      check(dm_c6_molecular(a, b, in_medium ? sys.get() : vac.get(), c, &q, &two), "c6 molecular");
      const double ref = in_medium ? screened : vdw;
      const double tol = in_medium ? medium_correspondence_tolerance : vacuum_correspondence_tolerance;
      const double delta = relative(two, ref);
      const bool ok = delta < tol;
      if (c == DM_ABRAHAM)
        abraham_ok = abraham_ok && ok;
      t.add({in_medium ? "config" : "vacuum", name(c), csv_number(two), csv_number(ref),
             csv_number(delta), csv_number(tol), ok ? "yes" : "no"});
    }
  }
  emit(t, opt, io);
  io.out << "correspondence: " << verdict(abraham_ok) << " for the Abraham prescription\n";
  return abraham_ok ? exit_ok : exit_criterion;
}

int cmd_verify_microscopic(const SystemConfig& cfg, const RunOptions& opt, Streams io) {
  const double s = dm_hamaker_monomial_scale(cfg.radius1, cfg.radius2);
  Table t{{"choice", "chi1*chi2 [scale]", "chi1*chi [scale]", "chi2*chi [scale]", "chi^2 [scale]",
           "third_order_ratio", "hamaker_match", "three_particle_match"},
          {}};
  bool abraham_ok = true;
  for (auto c : selected(opt.choices)) {
    dm_expansion e;
    check(dm_expand_c6_integrand(cfg.radius1, cfg.radius2, c, cfg.expansion_step, &e),
          "expansion");
    if (c == DM_ABRAHAM)
      abraham_ok = e.hamaker_match && e.three_particle_match;
    t.add({name(c), csv_number(e.chi1_chi2 / s), csv_number(e.chi1_chi / s),
           csv_number(e.chi2_chi / s), csv_number(e.chi_chi / s), csv_number(e.third_order_ratio),
           e.hamaker_match ? "yes" : "no", e.three_particle_match ? "yes" : "no"});
  }
  emit(t, opt, io);
  io.out << "scale = hbar R1^3 R2^3 / (3 pi) = " << text_number(s)
         << " J m^6 s; three-particle ratio is relative to 2 hbar R1^3 R2^3 / (9 pi)\n"
         << "microscopic: " << verdict(abraham_ok) << " for the Abraham prescription\n";
  return abraham_ok ? exit_ok : exit_criterion;
}

int cmd_oracle_hamaker(const SystemConfig& cfg, const RunOptions& opt, Streams io) {
  const double r1 = cfg.radius1, r2 = cfg.radius2;
  const double r12 = opt.r12.value_or(10.0 * std::max(r1, r2));
  const double pitch = opt.pitch.value_or(std::min(r1, r2) / 20.0);
  double g = 0.0, geometry = 0.0;
  check(dm_hamaker_lattice_sum(r1, r2, r12, pitch, &g), "lattice sum");
  check(dm_hamaker_sphere_geometry(r1, r2, r12, &geometry), "sphere geometry");
  const double v1 = 4.0 * pi * r1 * r1 * r1 / 3.0, v2 = 4.0 * pi * r2 * r2 * r2 / 3.0;
  const double point = v1 * v2 / std::pow(r12, 6);
  const double bound = dm_lattice_volume_error_bound(r1, pitch) + dm_lattice_volume_error_bound(r2, pitch);

  const double point_ratio = g / point, geometry_ratio = g / geometry;
  const bool ok = std::abs(point_ratio - 1.0) <= hamaker_tolerance;
  Table t{{"target", "G [1]", "target [1]", "ratio", "tolerance", "status"}, {}};
  t.add({"point limit V1 V2 / r12^6", csv_number(g), csv_number(point), csv_number(point_ratio),
         csv_number(hamaker_tolerance), verdict(ok)});
  t.add({"continuum spheres", csv_number(g), csv_number(geometry), csv_number(geometry_ratio),
         csv_number(bound), verdict(std::abs(geometry_ratio - 1.0) <= bound)});
  emit(t, opt, io);
  io.out << "r12 = " << text_number(r12) << " m, pitch = " << text_number(pitch) << " m\n";
  return ok ? exit_ok : exit_criterion;
}

int cmd_oracle_axilrod_teller(const SystemConfig& cfg, const RunOptions& opt, Streams io) {
  const double r12 = opt.r12.value_or(20.0 * std::max(cfg.radius1, cfg.radius2));
  dm_montecarlo mc = cfg.montecarlo;
  if (opt.samples)
    mc.samples = *opt.samples;
  if (opt.seed)
    mc.seed = *opt.seed;
  if (opt.workers)
    mc.workers = *opt.workers;

  double estimate = 0.0, se = 0.0;
  check(dm_at_medium_mc(r12, cfg.radius1, cfg.radius2, &mc, &estimate, &se), "Monte Carlo");
  const double target = dm_at_medium_point_limit(r12);
  const double scale = std::pow(r12, 6);
  const double rel = relative(estimate, target);
  const double sigmas = se > 0.0 ? std::abs(estimate - target) / se : INFINITY;
  const bool ok = rel <= mc_relative_tolerance && sigmas <= mc_sigma_tolerance;

  Table t{{"I r12^6 [1]", "standard_error [1]", "target 8pi/3 [1]", "relative_delta",
           "delta/standard_error", "samples", "seed", "status"},
          {}};
  t.add({csv_number(estimate * scale), csv_number(se * scale), csv_number(target * scale),
         csv_number(rel), csv_number(sigmas), std::to_string(mc.samples), std::to_string(mc.seed),
         verdict(ok)});
  emit(t, opt, io);
  return ok ? exit_ok : exit_criterion;
}

namespace {

struct Arctan {
  double a;
};
double arctan_kernel(double xi, void* user) {
  const double a = static_cast<Arctan*>(user)->a;
  return a * a / (a * a + xi * xi);
}
double oscillator_kernel(double xi, void* user) {
  const double w = static_cast<Arctan*>(user)->a;
  const double x = w * w / (4.0 * w * w + 3.0 * xi * xi);
  return x * x;
}
double cubic_kernel(double xi, void* user) {
  const double s = static_cast<Arctan*>(user)->a;
  const double u = xi / (xi + s);
  return 4.0 * u * u * u * (1.0 - u) * (1.0 - u) / s;
}

} // namespace

int cmd_oracle_quadrature(const dm_quadrature& quad, const RunOptions& opt, Streams io) {
  dm_quadrature q = quad;
  if (opt.tolerance)
    q.relative_tolerance = *opt.tolerance;
  Arctan p{q.scale > 0.0 ? q.scale : 1e16};
  const double a = p.a;
  const double osc_ref = pi * std::pow(a, 4) / (36.0 * std::pow(std::sqrt(4.0 / 3.0) * a, 3));

  struct Case {
    const char* label;
    dm_integrand f;
    double reference;
    double tolerance;
  };
  const Case cases[] = {
      {"a^2/(a^2+xi^2)", arctan_kernel, pi * a / 2.0, quadrature_tolerance},
      {"single oscillator squared", oscillator_kernel, osc_ref, quadrature_tolerance},
      {"mapped 4u^3", cubic_kernel, 1.0, exactness_tolerance},
  };
  Table t{{"integrand", "value", "reference", "relative_error", "error_estimate", "tolerance",
           "status"},
          {}};
  bool ok = true;
  for (const auto& c : cases) {
    dm_quadrature cq = q;
    cq.scale = a;
    double value = 0.0, err = 0.0;
    check(dm_integrate(c.f, &p, &cq, &value, &err), "quadrature");
    const double rel = relative(value, c.reference);
    ok = ok && rel <= c.tolerance;
    t.add({c.label, csv_number(value), csv_number(c.reference), csv_number(rel), csv_number(err),
           csv_number(c.tolerance), verdict(rel <= c.tolerance)});
  }
  emit(t, opt, io);
  return ok ? exit_ok : exit_criterion;
}

std::vector<double> sweep_grid(double from, double to, int steps, bool log_spacing) {
  if (steps < 2)
    throw CliError(exit_config, "--steps must be >= 2");
  if (!(std::isfinite(from) && std::isfinite(to)) || from < 0.0 || to < 0.0)
    throw CliError(exit_config, "sweep range must be finite and non-negative");
  if (log_spacing && !(from > 0.0 && to > 0.0))
    throw CliError(exit_config, "logarithmic sweeps need a positive range");
  std::vector<double> g(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    const double f = static_cast<double>(i) / (steps - 1);
    g[static_cast<std::size_t>(i)] =
        log_spacing ? std::exp(std::log(from) + f * (std::log(to) - std::log(from)))
                    : from + f * (to - from);
  }
  g.front() = from;
  g.back() = to;
  return g;
}

int cmd_sweep(const SystemConfig& cfg, SweepVariable var, const RunOptions& opt, Streams io) {
  const auto grid = sweep_grid(opt.from, opt.to, opt.steps, opt.log_spacing);
  if (var != SweepVariable::Density && grid.front() <= 0.0)
    throw CliError(exit_config, "sweep range must be positive");
  const auto q = quadrature(cfg, opt);
  const auto base = cfg.build();

  const char* label = var == SweepVariable::Separation ? "r12 [m]"
                      : var == SweepVariable::Density  ? "medium_density_scale [1]"
                                                       : "radius [m]";
  Table t{{label, "C6_Abraham [J m^6]", "C6_Maxwell [J m^6]", "U_Abraham [J]", "U_Maxwell [J]",
           "F_Abraham [N]", "F_Maxwell [N]"},
          {}};

  const auto c6_pair = [&](const dm_system* s) {
    std::array<double, 2> out{};
    for (auto c : {DM_ABRAHAM, DM_MAXWELL}) {
      dm_breakdown b;
      check(dm_c6(s, c, &q, &b), "c6");
      out[c == DM_ABRAHAM ? 0 : 1] = b.total;
    }
    return out;
  };
  const auto row = [&](double x, std::array<double, 2> c, double r12) {
    t.add({csv_number(x), csv_number(c[0]), csv_number(c[1]), csv_number(dm_potential(c[0], r12)),
           csv_number(dm_potential(c[1], r12)), csv_number(dm_force(c[0], r12)),
           csv_number(dm_force(c[1], r12))});
  };

  bool warned = false;
  const auto warn_once = [&](double r12, double radius) {
    if (!warned && r12 < 5.0 * radius) {
      io.err << "warning: r12 < 5 max(R1, R2) in part of the sweep; the small-sphere formulas are "
                "asymptotic\n";
      warned = true;
    }
  };

  const double rmax = std::max(cfg.radius1, cfg.radius2);
  if (var == SweepVariable::Separation) {
    const auto c = c6_pair(base.get());
    for (double r : grid) {
      dm_system* raw = nullptr;
      check(dm_system_with_separation(base.get(), r, &raw), "separation");
      System(raw).reset();
      warn_once(r, rmax);
      row(r, c, r);
    }
  } else {
    for (double x : grid) {
      dm_system* raw = nullptr;
      if (var == SweepVariable::Density)
        check(dm_system_with_medium_scaled(base.get(), x, &raw), "density");
      else
        check(dm_system_with_radius(base.get(), x, &raw), "radius");
      const System s(raw);
      warn_once(cfg.separation, var == SweepVariable::Radius ? x : rmax);
      row(x, c6_pair(s.get()), cfg.separation);
    }
  }

  if (opt.output.empty()) {
    write_csv(t, io.out);
  } else {
    std::ofstream f(opt.output, std::ios::binary);
    if (!f)
      throw CliError(exit_other, "cannot write '" + opt.output + "'");
    write_csv(t, f);
    io.out << "wrote " << t.rows.size() << " rows to " << opt.output << '\n';
  }
  return exit_ok;
}

} // namespace dispmed::cli
