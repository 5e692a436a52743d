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

// Support code for the dispmed command-line tool. Everything here goes
// through the C interface in dispmed/dispmed.h.
#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dispmed/dispmed.h"

namespace dispmed::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_other = 1,
  exit_config = 2,
  exit_numerical = 3,
  exit_criterion = 4,
};

class CliError : public std::runtime_error {
public:
  CliError(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
  int code() const noexcept { return code_; }

private:
  int code_;
};

// Throws CliError for anything but DM_OK. Convergence and divergence map to
// exit_numerical, invalid arguments to exit_config.
void check(dm_status s, const char* context);

struct ResponseDeleter {
  void operator()(dm_response* r) const noexcept { dm_response_free(r); }
};
struct PolarisabilityDeleter {
  void operator()(dm_polarisability* p) const noexcept { dm_polarisability_free(p); }
};
struct SystemDeleter {
  void operator()(dm_system* s) const noexcept { dm_system_free(s); }
};
using Response = std::unique_ptr<dm_response, ResponseDeleter>;
using Polarisability = std::unique_ptr<dm_polarisability, PolarisabilityDeleter>;
using System = std::unique_ptr<dm_system, SystemDeleter>;

// "constant 2.5", "oscillators wp w0 g, wp w0 g", "table xi v, xi v, ...";
// "table strict ..." rejects queries past the last sample instead of
// falling back to vacuum.
Response parse_material(const std::string& text);
// "lorentz a0 w0 g, a0 w0 g" with a0 the static value in C m^2/V.
Polarisability parse_polarisability(const std::string& text);

struct SpeciesConfig {
  double density = 0.0; // 1/m^3
  Polarisability polarisability;
};

struct SystemConfig {
  double radius1 = 0.0, radius2 = 0.0;
  double separation = 0.0;
  Response eps1, mu1, eps2, mu2, eps, mu;
  SpeciesConfig species1, species2, species_medium;
  dm_quadrature quadrature = dm_quadrature_default();
  dm_montecarlo montecarlo = dm_montecarlo_default();
  double expansion_step = 1e-3;

  System build() const;
  System build(double separation_override) const;
};

SystemConfig parse_config(std::istream& in);
SystemConfig load_config(const std::string& path);

// Default molecule for the correspondence check when the config has none:
// alpha(0) = eps0 * 1e-30 m^3 with a single resonance at 1e16 rad/s.
Polarisability default_species();

// ---------------------------------------------------------------------------
// Output

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add(std::vector<std::string> row) { rows.push_back(std::move(row)); }
};

std::string csv_number(double v); // round-trippable
std::string text_number(double v);
void write_csv(const Table& t, std::ostream& out);
void write_text(const Table& t, std::ostream& out);
Table read_csv(std::istream& in);

// ---------------------------------------------------------------------------
// Commands

enum class Choices { Both, Abraham, Maxwell };

struct RunOptions {
  Choices choices = Choices::Both;
  std::optional<double> r12;
  std::optional<double> tolerance;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> samples;
  std::optional<double> pitch;
  std::optional<unsigned> workers;
  int sphere = 1;
  double from = 0.0, to = 0.0;
  int steps = 0;
  bool log_spacing = false;
  std::string output; // CSV path, empty for none
};

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

int cmd_c6(const SystemConfig& cfg, const RunOptions& opt, Streams io);
int cmd_c3(const SystemConfig& cfg, const RunOptions& opt, Streams io);
int cmd_verify_duality(const SystemConfig& cfg, const RunOptions& opt, Streams io);
int cmd_verify_correspondence(const SystemConfig& cfg, const RunOptions& opt, Streams io);
int cmd_verify_microscopic(const SystemConfig& cfg, const RunOptions& opt, Streams io);
int cmd_oracle_hamaker(const SystemConfig& cfg, const RunOptions& opt, Streams io);
int cmd_oracle_axilrod_teller(const SystemConfig& cfg, const RunOptions& opt, Streams io);
int cmd_oracle_quadrature(const dm_quadrature& quad, const RunOptions& opt, Streams io);
enum class SweepVariable { Separation, Density, Radius };
int cmd_sweep(const SystemConfig& cfg, SweepVariable var, const RunOptions& opt, Streams io);

// Grid used by sweeps: `steps` points from `from` to `to` inclusive.
std::vector<double> sweep_grid(double from, double to, int steps, bool log_spacing);

} // namespace dispmed::cli
