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

#include <CLI11.hpp>

#include <iostream>
#include <map>

#include "cli.hpp"

namespace cli = dispmed::cli;

int main(int argc, char** argv) {
  CLI::App app{"Dispersion forces between small spheres in a magneto-dielectric medium"};
  app.set_version_flag("--version", std::string(dm_version()));
  app.require_subcommand(1);
  // Global flags may also follow the subcommand.
  app.fallthrough();

  std::string config_path;
  cli::RunOptions opt;
  std::string choice = "both";
  double tolerance = 0.0;
  std::uint64_t seed = 0;

  app.add_option("--config", config_path, "System configuration (INI)")->check(CLI::ExistingFile);
  app.add_option("--output", opt.output, "Write the result table as CSV to this path");
  app.add_option("--tolerance", tolerance, "Relative quadrature tolerance")
      ->check(CLI::Range(1e-15, 0.5));
  app.add_option("--seed", seed, "Monte Carlo seed");

  const std::map<std::string, cli::Choices> choices{{"both", cli::Choices::Both},
                                                    {"abraham", cli::Choices::Abraham},
                                                    {"maxwell", cli::Choices::Maxwell}};
  const auto add_choice = [&](CLI::App* sub) {
    sub->add_option("--choice", choice, "Stress tensor: both, abraham or maxwell")
        ->check(CLI::IsMember({"both", "abraham", "maxwell"}, CLI::ignore_case));
  };

  double r12 = 0.0;
  auto* c6 = app.add_subcommand("c6", "Two-sphere C6 coefficient, potential and force");
  add_choice(c6);
  c6->add_option("--r12", r12, "Centre-to-centre separation in m (default: from config)")
      ->check(CLI::PositiveNumber);

  auto* c3 = app.add_subcommand("c3", "C3 coefficient of one sphere before a perfect mirror");
  add_choice(c3);
  c3->add_option("--sphere", opt.sphere, "Which sphere of the config (1 or 2)")
      ->check(CLI::IsMember({1, 2}));

  auto* verify = app.add_subcommand("verify", "Check a consistency criterion");
  verify->require_subcommand(1);
  auto* duality = verify->add_subcommand("duality", "Invariance under eps <-> mu");
  auto* correspondence =
      verify->add_subcommand("correspondence", "Molecular limit against van der Waals");
  auto* microscopic =
      verify->add_subcommand("microscopic", "Susceptibility expansion against Hamaker + 3-body");
  for (auto* s : {duality, correspondence, microscopic})
    add_choice(s);

  auto* oracle = app.add_subcommand("oracle", "Run an independent numerical oracle");
  oracle->require_subcommand(1);
  auto* hamaker = oracle->add_subcommand("hamaker", "Lattice pair sum against Hamaker's limit");
  hamaker->add_option("--r12", r12, "Separation in m (default 10 max(R1, R2))")
      ->check(CLI::PositiveNumber);
  double pitch = 0.0;
  hamaker->add_option("--pitch", pitch, "Lattice pitch in m (default min(R1, R2)/20)")
      ->check(CLI::PositiveNumber);
  auto* at = oracle->add_subcommand("axilrod-teller", "Monte Carlo medium integral against 8pi/3");
  at->add_option("--r12", r12, "Separation in m (default 20 max(R1, R2))")
      ->check(CLI::PositiveNumber);
  std::uint64_t samples = 0;
  at->add_option("--samples", samples, "Monte Carlo sample count")->check(CLI::PositiveNumber);
  unsigned workers = 0;
  at->add_option("--workers", workers, "Worker threads (result does not depend on it)")
      ->check(CLI::PositiveNumber);
  auto* quad = oracle->add_subcommand("quadrature", "Quadrature against closed forms");

  auto* sweep = app.add_subcommand("sweep", "Tabulate C6, U and F over one variable as CSV");
  sweep->require_subcommand(1);
  auto* sweep_r = sweep->add_subcommand("r12", "Sweep the separation (m)");
  auto* sweep_d = sweep->add_subcommand("density", "Sweep a scale factor on the medium density");
  auto* sweep_radius = sweep->add_subcommand("radius", "Sweep both sphere radii (m)");
  for (auto* s : {sweep_r, sweep_d, sweep_radius}) {
    s->add_option("--from", opt.from, "First value")->required();
    s->add_option("--to", opt.to, "Last value")->required();
    s->add_option("--steps", opt.steps, "Number of points (>= 2)")->required();
    s->add_flag("--log", opt.log_spacing, "Logarithmic spacing");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::exit_ok : cli::exit_config;
  }

  opt.choices = choices.at(CLI::detail::to_lower(choice));
  if (app.count("--tolerance"))
    opt.tolerance = tolerance;
  if (app.count("--seed"))
    opt.seed = seed;
  if (r12 > 0.0)
    opt.r12 = r12;
  if (pitch > 0.0)
    opt.pitch = pitch;
  if (samples > 0)
    opt.samples = samples;
  if (workers > 0)
    opt.workers = workers;

  const cli::Streams io{std::cout, std::cerr};
  try {
    if (quad->parsed()) {
      const auto q = config_path.empty() ? dm_quadrature_default()
                                         : cli::load_config(config_path).quadrature;
      return cli::cmd_oracle_quadrature(q, opt, io);
    }
    if (config_path.empty())
      throw cli::CliError(cli::exit_config, "--config is required for this command");
    const auto cfg = cli::load_config(config_path);

    if (c6->parsed())
      return cli::cmd_c6(cfg, opt, io);
    if (c3->parsed())
      return cli::cmd_c3(cfg, opt, io);
    if (duality->parsed())
      return cli::cmd_verify_duality(cfg, opt, io);
    if (correspondence->parsed())
      return cli::cmd_verify_correspondence(cfg, opt, io);
    if (microscopic->parsed())
      return cli::cmd_verify_microscopic(cfg, opt, io);
    if (hamaker->parsed())
      return cli::cmd_oracle_hamaker(cfg, opt, io);
    if (at->parsed())
      return cli::cmd_oracle_axilrod_teller(cfg, opt, io);
    if (sweep_r->parsed())
      return cli::cmd_sweep(cfg, cli::SweepVariable::Separation, opt, io);
    if (sweep_d->parsed())
      return cli::cmd_sweep(cfg, cli::SweepVariable::Density, opt, io);
    if (sweep_radius->parsed())
      return cli::cmd_sweep(cfg, cli::SweepVariable::Radius, opt, io);
  } catch (const cli::CliError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::exit_other;
  }
  return cli::exit_other;
}
