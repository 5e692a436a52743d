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
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <numbers>
#include <sys/wait.h>
#include <unistd.h>

#include "cli.hpp"

using namespace dispmed::cli;
namespace fs = std::filesystem;

namespace {

const std::string config_dir = DISPMED_CONFIG_DIR;
const std::string cli_path = DISPMED_CLI_PATH;

SystemConfig config(const std::string& name) { return load_config(config_dir + "/" + name); }

SystemConfig config_text(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("dispmed_test_cli_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir / name;
}

Table read_file(const fs::path& p) {
  std::ifstream in(p);
  return read_csv(in);
}

double num(const std::string& s) { return std::stod(s); }

// Runs a command with CSV output and returns (exit code, table).
template <class F>
std::pair<int, Table> run(F&& command, RunOptions opt = {}) {
  opt.output = scratch("out.csv").string();
  std::ostringstream out, err;
  const int code = command(opt, Streams{out, err});
  return {code, read_file(opt.output)};
}

int shell(const std::string& args, const fs::path& stdout_file = "/dev/null") {
  const std::string cmd = "'" + cli_path + "' " + args + " > '" + stdout_file.string() + "' 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

const std::string minimal = R"(
[system]
separation = 1e-8
[sphere1]
radius = 1e-9
permittivity = oscillators 1e16 1e16 0
[sphere2]
radius = 1e-9
permittivity = oscillators 1e16 1e16 0
)";

} // namespace

TEST_CASE("material syntax") {
  double v = 0.0;
  auto c = parse_material("constant 2.5");
  CHECK(dm_response_eval(c.get(), 1e16, &v) == DM_OK);
  CHECK(v == 2.5);

  auto o = parse_material("  oscillators 1e16 1e16 0 ,  2e16 3e16 1e14 ");
  CHECK(dm_response_eval(o.get(), 0.0, &v) == DM_OK);
  CHECK(v == doctest::Approx(1.0 + 1.0 + 4.0 / 9.0).epsilon(1e-15));

  auto t = parse_material("table 1e15 2, 1e16 1.5");
  CHECK(dm_response_eval(t.get(), 1e17, &v) == DM_OK);
  CHECK(v == 1.0);
  auto strict = parse_material("table strict 1e15 2, 1e16 1.5");
  CHECK(dm_response_eval(strict.get(), 1e17, &v) == DM_ERR_RANGE);

  for (std::string bad : {"constant", "constant x", "constant 0.5", "oscillators 1 2",
                          "oscillators 1e16 1e16 0,", "metal 3", "table 1e15", ""}) {
    CAPTURE(bad);
    try {
      parse_material(bad);
      FAIL("accepted");
    } catch (const CliError& e) {
      CHECK(e.code() == exit_config);
    }
  }
  CHECK_THROWS_AS(parse_polarisability("drude 1 2 3"), CliError);
  CHECK(parse_polarisability("lorentz 1e-40 1e16 0, 2e-40 5e15 1e13"));
}

TEST_CASE("config parsing") {
  const auto c = config_text(minimal);
  CHECK(c.separation == 1e-8);
  CHECK(c.radius2 == 1e-9);
  CHECK(c.quadrature.relative_tolerance == dm_quadrature_default().relative_tolerance);
  CHECK_FALSE(c.species1.polarisability);

  const auto md = config("magneto_dielectric.ini");
  CHECK(md.montecarlo.samples == 10'000'000);
  CHECK(md.radius2 == 2e-9);

  const auto expect_config_error = [](const std::string& text) {
    CAPTURE(text);
    try {
      config_text(text);
      FAIL("accepted");
    } catch (const CliError& e) {
      CHECK(e.code() == exit_config);
    }
  };
  expect_config_error(minimal + "[sphere3]\nradius = 1\n");
  expect_config_error(minimal + "[medium]\npermitivity = constant 1\n");
  expect_config_error("[sphere1]\nradius = 1e-9\n[sphere2]\nradius = 1e-9\n");
  expect_config_error(minimal + "[quadrature]\ntolerance = 2\n");
  expect_config_error(minimal + "[montecarlo]\nsamples = 1.5\n");
  expect_config_error(minimal + "[species1]\ndensity = 1e27\n");
  // Touching spheres.
  expect_config_error("[system]\nseparation = 2e-9\n[sphere1]\nradius = 1e-9\n[sphere2]\nradius = 1e-9\n");
  CHECK_THROWS_AS(load_config(config_dir + "/missing.ini"), CliError);
}

TEST_CASE("CSV numbers round-trip") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> mant(-10.0, 10.0);
  std::uniform_int_distribution<int> ex(-300, 300);
  Table t{{"a [J]", "b [m]"}, {}};
  std::vector<double> values;
  for (int i = 0; i < 1000; ++i) {
    const double v = mant(rng) * std::pow(10.0, ex(rng));
    values.push_back(v);
    CHECK(std::strtod(csv_number(v).c_str(), nullptr) == v);
  }
  for (std::size_t i = 0; i + 1 < values.size(); i += 2)
    t.add({csv_number(values[i]), csv_number(values[i + 1])});
  std::stringstream ss;
  write_csv(t, ss);
  const auto back = read_csv(ss);
  CHECK(back.header == t.header);
  REQUIRE(back.rows.size() == t.rows.size());
  for (std::size_t i = 0; i < back.rows.size(); ++i)
    CHECK(num(back.rows[i][0]) == values[2 * i]);
  CHECK(csv_number(1e-12) == "1e-12");
  CHECK(csv_number(0.0) == "0");
}

TEST_CASE("c6 command") {
  const auto vac = config("single_oscillator.ini");
  auto [code, t] = run([&](auto& o, auto io) { return cmd_c6(vac, o, io); });
  CHECK(code == exit_ok);
  REQUIRE(t.rows.size() == 2);
  CHECK(t.header[3] == "C6 [J m^6]");
  const double a = num(t.rows[0][3]), m = num(t.rows[1][3]);
  CHECK(std::abs(a - m) / std::abs(a) < 1e-12);
  CHECK(a == doctest::Approx(-5.708037397731963e-74).epsilon(1e-9));
  CHECK(num(t.rows[0][6]) == doctest::Approx(a / 1e-48).epsilon(1e-14));

  const auto zero = config("zero_excess.ini");
  auto [zc, zt] = run([&](auto& o, auto io) { return cmd_c6(zero, o, io); });
  CHECK(zc == exit_ok);
  for (const auto& row : zt.rows)
    CHECK(row[3] == "0");

  RunOptions only;
  only.choices = Choices::Maxwell;
  auto [mc, mt] = run([&](auto& o, auto io) { return cmd_c6(vac, o, io); }, only);
  REQUIRE(mt.rows.size() == 1);
  CHECK(mt.rows[0][0] == "Maxwell");
}

TEST_CASE("c3 command") {
  const auto zero = config("zero_excess.ini");
  RunOptions opt;
  opt.sphere = 2;
  auto [code, t] = run([&](auto& o, auto io) { return cmd_c3(zero, o, io); }, opt);
  CHECK(code == exit_ok);
  for (const auto& row : t.rows)
    CHECK(row[4] == "0");

  // Non-magnetic system in a dielectric: the integrand ratio is 1/eps.
  const auto c = config_text(minimal + "[medium]\npermittivity = oscillators 1e16 2e16 0\n");
  std::ostringstream out, err;
  CHECK(cmd_c3(c, RunOptions{}, Streams{out, err}) == exit_ok);
  CHECK(out.str().find("Maxwell/Abraham at xi = 0: 8.000000000e-01 (1/eps = 8.000000000e-01)") !=
        std::string::npos);
}

TEST_CASE("verify commands") {
  const auto md = config("magneto_dielectric.ini");
  auto [code, t] = run([&](auto& o, auto io) { return cmd_verify_duality(md, o, io); });
  CHECK(code == exit_ok);
  REQUIRE(t.rows.size() == 2);
  CHECK(num(t.rows[0][3]) < 1e-10);
  CHECK(num(t.rows[1][3]) > 1e-2);
  CHECK(t.rows[1][4] == "no");

  const auto self = config("self_dual.ini");
  auto [sc, st] = run([&](auto& o, auto io) { return cmd_verify_duality(self, o, io); });
  CHECK(sc == exit_ok);
  for (const auto& row : st.rows)
    CHECK(num(row[3]) < 1e-10);

  auto [mc, mt] = run([&](auto& o, auto io) { return cmd_verify_microscopic(md, o, io); });
  CHECK(mc == exit_ok);
  CHECK(num(mt.rows[0][5]) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(num(mt.rows[1][5]) == doctest::Approx(2.5).epsilon(1e-6));
  CHECK(mt.rows[1][6] == "yes");
  CHECK(mt.rows[1][7] == "no");

  auto [cc, ct] = run([&](auto& o, auto io) { return cmd_verify_correspondence(md, o, io); });
  CHECK(cc == exit_ok);
  REQUIRE(ct.rows.size() == 4);
  CHECK(ct.rows[0][6] == "yes"); // vacuum, Abraham
  CHECK(ct.rows[1][6] == "yes"); // medium, Abraham
  CHECK(ct.rows[3][6] == "no");  // medium, Maxwell
}

TEST_CASE("oracle commands") {
  std::ostringstream out, err;
  CHECK(cmd_oracle_quadrature(dm_quadrature_default(), RunOptions{}, Streams{out, err}) == exit_ok);

  const auto c = config_text(minimal);
  RunOptions opt;
  opt.pitch = 1e-10;
  auto [hc, ht] = run([&](auto& o, auto io) { return cmd_oracle_hamaker(c, o, io); }, opt);
  REQUIRE(ht.rows.size() == 2);
  CHECK(ht.rows[1][5] == "PASS");
  // The continuum ratio at 10 R is 1.063, outside the 2% point-limit band.
  CHECK(num(ht.rows[0][3]) > 1.05);
  CHECK(hc == exit_criterion);

  RunOptions mc;
  mc.samples = 100'000;
  auto [ac, at] = run([&](auto& o, auto io) { return cmd_oracle_axilrod_teller(c, o, io); }, mc);
  REQUIRE(at.rows.size() == 1);
  CHECK(num(at.rows[0][0]) == doctest::Approx(8.0 * std::numbers::pi / 3.0).epsilon(0.1));
  CHECK((ac == exit_ok || ac == exit_criterion));
}

TEST_CASE("sweeps") {
  const auto md = config("magneto_dielectric.ini");
  RunOptions opt;
  opt.from = 1e-8;
  opt.to = 8e-8;
  opt.steps = 8;
  opt.log_spacing = true;
  auto [code, t] = run([&](auto& o, auto io) { return cmd_sweep(md, SweepVariable::Separation, o, io); }, opt);
  CHECK(code == exit_ok);
  REQUIRE(t.rows.size() == 8);
  CHECK(t.header[0] == "r12 [m]");
  CHECK(t.header[3] == "U_Abraham [J]");
  for (const auto& row : t.rows) {
    const double r = num(row[0]);
    CHECK(num(row[1]) == num(t.rows[0][1]));
    CHECK(num(row[3]) * std::pow(r, 6) == doctest::Approx(num(row[1])).epsilon(1e-14));
    CHECK(num(row[6]) * std::pow(r, 7) == doctest::Approx(6.0 * num(row[2])).epsilon(1e-14));
  }

  opt.from = 0.0;
  opt.to = 1.0;
  opt.steps = 5;
  opt.log_spacing = false;
  auto [dc, dt] = run([&](auto& o, auto io) { return cmd_sweep(md, SweepVariable::Density, o, io); }, opt);
  CHECK(dc == exit_ok);
  CHECK(num(dt.rows[0][1]) == doctest::Approx(num(dt.rows[0][2])).epsilon(1e-12));
  CHECK(std::abs(num(dt.rows[4][1]) - num(dt.rows[4][2])) > 1e-2 * std::abs(num(dt.rows[4][1])));

  const auto vac = config("single_oscillator.ini");
  opt.from = 5e-10;
  opt.to = 2e-9;
  opt.steps = 4;
  auto [rc, rt] = run([&](auto& o, auto io) { return cmd_sweep(vac, SweepVariable::Radius, o, io); }, opt);
  CHECK(rc == exit_ok);
  for (const auto& row : rt.rows) {
    const double ratio = num(row[0]) / num(rt.rows[0][0]);
    CHECK(num(row[1]) == doctest::Approx(num(rt.rows[0][1]) * std::pow(ratio, 6)).epsilon(1e-12));
  }

  CHECK_THROWS_AS(sweep_grid(1.0, 2.0, 1, false), CliError);
  CHECK_THROWS_AS(sweep_grid(0.0, 2.0, 3, true), CliError);
  const auto g = sweep_grid(1.0, 100.0, 3, true);
  CHECK(g[1] == doctest::Approx(10.0).epsilon(1e-14));
}

TEST_CASE("executable exit codes and determinism") {
  const std::string md = "--config '" + config_dir + "/magneto_dielectric.ini' ";
  CHECK(shell(md + "c6") == exit_ok);
  CHECK(shell("c6") == exit_config);
  CHECK(shell("--config '" + config_dir + "/missing.ini' c6") == exit_config);
  CHECK(shell(md + "c6 --choice sideways") == exit_config);
  CHECK(shell(md + "verify duality") == exit_ok);
  CHECK(shell("oracle quadrature") == exit_ok);
  CHECK(shell(md + "oracle hamaker --pitch 1e-10") == exit_criterion);

  const auto divergent = scratch("divergent.ini");
  std::ofstream(divergent) << minimal << "[medium]\npermittivity = constant 2\n";
  CHECK(shell("--config '" + divergent.string() + "' c6") == exit_numerical);

  const auto a = scratch("a.txt"), b = scratch("b.txt");
  const std::string at = md + "oracle axilrod-teller --samples 20000 --seed 7";
  shell(at, a);
  shell(at + " --workers 3", b);
  std::ifstream fa(a), fb(b);
  const std::string sa((std::istreambuf_iterator<char>(fa)), {});
  const std::string sb((std::istreambuf_iterator<char>(fb)), {});
  CHECK(!sa.empty());
  CHECK(sa == sb);

  const auto csv = scratch("sweep.csv");
  CHECK(shell(md + "--output '" + csv.string() + "' sweep radius --from 1e-9 --to 2e-9 --steps 3") ==
        exit_ok);
  CHECK(read_file(csv).rows.size() == 3);
  fs::remove_all(csv.parent_path());
}
