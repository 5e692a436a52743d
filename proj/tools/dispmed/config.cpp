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

#include <boost/algorithm/string.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "cli.hpp"

namespace dispmed::cli {

namespace pt = boost::property_tree;

void check(dm_status s, const char* context) {
  if (s == DM_OK)
    return;
  std::string msg = std::string(context) + ": " + dm_last_error();
  switch (s) {
  case DM_ERR_DIVERGENT:
  case DM_ERR_CONVERGENCE:
    throw CliError(exit_numerical, msg);
  case DM_ERR_INVALID_ARGUMENT:
    throw CliError(exit_config, msg);
  default:
    throw CliError(exit_other, msg);
  }
}

namespace {

[[noreturn]] void config_error(const std::string& msg) { throw CliError(exit_config, msg); }

double parse_number(std::string_view s, const std::string& what) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
    s.remove_suffix(1);
  if (!s.empty() && s.front() == '+')
    s.remove_prefix(1);
  double v = 0.0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || end != s.data() + s.size())
    config_error(what + ": '" + std::string(s) + "' is not a number");
  return v;
}

std::vector<std::string> split(const std::string& s, const char* by) {
  std::vector<std::string> out;
  boost::algorithm::split(out, s, boost::algorithm::is_any_of(by),
                          boost::algorithm::token_compress_on);
  out.erase(std::remove_if(out.begin(), out.end(), [](const std::string& t) { return t.empty(); }),
            out.end());
  return out;
}

// Comma-separated groups of `width` numbers.
std::vector<std::vector<double>> parse_groups(const std::string& body, std::size_t width,
                                              const std::string& what) {
  std::vector<std::vector<double>> groups;
  std::vector<std::string> raw;
  boost::algorithm::split(raw, body, boost::algorithm::is_any_of(","));
  for (auto& g : raw) {
    if (boost::algorithm::trim_copy(g).empty() && !boost::algorithm::trim_copy(body).empty())
      config_error(what + ": empty group in '" + body + "'");
    auto fields = split(boost::algorithm::trim_copy(g), " \t");
    if (fields.size() != width)
      config_error(what + ": expected " + std::to_string(width) + " numbers per group, got '" +
                   boost::algorithm::trim_copy(g) + "'");
    std::vector<double> row;
    for (auto& f : fields)
      row.push_back(parse_number(f, what));
    groups.push_back(std::move(row));
  }
  if (groups.empty())
    config_error(what + ": no values given");
  return groups;
}

std::pair<std::string, std::string> head_tail(const std::string& text) {
  const auto t = boost::algorithm::trim_copy(text);
  const auto cut = t.find_first_of(" \t");
  if (cut == std::string::npos)
    return {t, ""};
  return {t.substr(0, cut), boost::algorithm::trim_copy(t.substr(cut))};
}

} // namespace

Response parse_material(const std::string& text) {
  auto [kind, body] = head_tail(text);
  dm_response* raw = nullptr;
  if (kind == "constant") {
    check(dm_response_constant(parse_number(body, "constant"), &raw), "material");
  } else if (kind == "oscillators") {
    std::vector<double> wp, w0, g;
    for (const auto& row : parse_groups(body, 3, "oscillators")) {
      wp.push_back(row[0]);
      w0.push_back(row[1]);
      g.push_back(row[2]);
    }
    check(dm_response_oscillators(wp.data(), w0.data(), g.data(), wp.size(), &raw), "material");
  } else if (kind == "table") {
    auto rule = DM_EXTRAPOLATE_CLAMP;
    auto [first, rest] = head_tail(body);
    if (first == "strict") {
      rule = DM_EXTRAPOLATE_ERROR;
      body = rest;
    }
    std::vector<double> xi, v;
    for (const auto& row : parse_groups(body, 2, "table")) {
      xi.push_back(row[0]);
      v.push_back(row[1]);
    }
    check(dm_response_table(xi.data(), v.data(), xi.size(), rule, &raw), "material");
  } else {
    config_error("unknown material model '" + kind +
                 "' (expected constant, oscillators or table)");
  }
  return Response(raw);
}

Polarisability parse_polarisability(const std::string& text) {
  auto [kind, body] = head_tail(text);
  if (kind != "lorentz")
    config_error("unknown polarisability model '" + kind + "' (expected lorentz)");
  std::vector<double> a, w, g;
  for (const auto& row : parse_groups(body, 3, "lorentz")) {
    a.push_back(row[0]);
    w.push_back(row[1]);
    g.push_back(row[2]);
  }
  dm_polarisability* raw = nullptr;
  check(dm_polarisability_lorentz(a.data(), w.data(), g.data(), a.size(), &raw), "polarisability");
  return Polarisability(raw);
}

Polarisability default_species() {
  return parse_polarisability("lorentz 8.8541878128e-42 1e16 0");
}

namespace {

const std::map<std::string, std::set<std::string>>& known_keys() {
  static const std::map<std::string, std::set<std::string>> keys{
      {"system", {"separation"}},
      {"medium", {"permittivity", "permeability"}},
      {"sphere1", {"radius", "permittivity", "permeability"}},
      {"sphere2", {"radius", "permittivity", "permeability"}},
      {"species1", {"density", "polarisability"}},
      {"species2", {"density", "polarisability"}},
      {"medium_species", {"density", "polarisability"}},
      {"quadrature", {"scale", "tolerance", "max_doublings"}},
      {"montecarlo", {"samples", "seed", "chunks", "workers"}},
      {"expansion", {"step"}},
  };
  return keys;
}

class Reader {
public:
  explicit Reader(const pt::ptree& tree) : tree_(tree) {
    for (const auto& [section, body] : tree) {
      const auto it = known_keys().find(section);
      if (it == known_keys().end())
        config_error("unknown section [" + section + "]");
      if (!body.data().empty())
        config_error("key '" + section + "' outside any section");
      for (const auto& [key, value] : body)
        if (!it->second.count(key))
          config_error("unknown key '" + key + "' in [" + section + "]");
    }
  }

  std::optional<std::string> text(const std::string& section, const std::string& key) const {
    const auto s = tree_.get_child_optional(section);
    if (!s)
      return std::nullopt;
    const auto v = s->get_optional<std::string>(pt::ptree::path_type(key, '\0'));
    if (!v)
      return std::nullopt;
    return boost::algorithm::trim_copy(*v);
  }

  std::optional<double> number(const std::string& section, const std::string& key) const {
    const auto t = text(section, key);
    if (!t)
      return std::nullopt;
    return parse_number(*t, section + "." + key);
  }

  double required(const std::string& section, const std::string& key) const {
    const auto v = number(section, key);
    if (!v)
      config_error("missing " + section + "." + key);
    return *v;
  }

  template <class T>
  std::optional<T> integer(const std::string& section, const std::string& key) const {
    const auto t = text(section, key);
    if (!t)
      return std::nullopt;
    const double d = parse_number(*t, section + "." + key);
    if (!(d >= 0.0) || d != std::floor(d) || d > 1.8e19)
      config_error(section + "." + key + " must be a non-negative integer");
    return static_cast<T>(d);
  }

  Response material(const std::string& section, const std::string& key) const {
    const auto t = text(section, key);
    try {
      return parse_material(t ? *t : "constant 1");
    } catch (const CliError& e) {
      config_error(section + "." + key + ": " + e.what());
    }
  }

  bool has(const std::string& section) const { return tree_.get_child_optional(section).has_value(); }

private:
  const pt::ptree& tree_;
};

SpeciesConfig read_species(const Reader& r, const std::string& section) {
  SpeciesConfig s;
  if (!r.has(section))
    return s;
  s.density = r.number(section, "density").value_or(0.0);
  if (s.density < 0.0)
    config_error(section + ".density must be >= 0");
  const auto text = r.text(section, "polarisability");
  if (!text)
    config_error("missing " + section + ".polarisability");
  s.polarisability = parse_polarisability(*text);
  return s;
}

} // namespace

SystemConfig parse_config(std::istream& in) {
  pt::ptree tree;
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    config_error(std::string("malformed config: ") + e.what());
  }
  const Reader r(tree);

  SystemConfig c;
  c.separation = r.required("system", "separation");
  c.radius1 = r.required("sphere1", "radius");
  c.radius2 = r.required("sphere2", "radius");
  c.eps1 = r.material("sphere1", "permittivity");
  c.mu1 = r.material("sphere1", "permeability");
  c.eps2 = r.material("sphere2", "permittivity");
  c.mu2 = r.material("sphere2", "permeability");
  c.eps = r.material("medium", "permittivity");
  c.mu = r.material("medium", "permeability");
  c.species1 = read_species(r, "species1");
  c.species2 = read_species(r, "species2");
  c.species_medium = read_species(r, "medium_species");

  if (auto v = r.number("quadrature", "scale"))
    c.quadrature.scale = *v;
  if (auto v = r.number("quadrature", "tolerance"))
    c.quadrature.relative_tolerance = *v;
  if (auto v = r.integer<int>("quadrature", "max_doublings"))
    c.quadrature.max_doublings = *v;
  if (!(c.quadrature.relative_tolerance > 0.0 && c.quadrature.relative_tolerance < 1.0))
    config_error("quadrature.tolerance must lie in (0, 1)");
  if (c.quadrature.max_doublings < 1)
    config_error("quadrature.max_doublings must be >= 1");

  if (auto v = r.integer<std::uint64_t>("montecarlo", "samples"))
    c.montecarlo.samples = *v;
  if (auto v = r.integer<std::uint64_t>("montecarlo", "seed"))
    c.montecarlo.seed = *v;
  if (auto v = r.integer<unsigned>("montecarlo", "chunks"))
    c.montecarlo.chunks = *v;
  if (auto v = r.integer<unsigned>("montecarlo", "workers"))
    c.montecarlo.workers = *v;
  if (auto v = r.number("expansion", "step"))
    c.expansion_step = *v;

  // Catches bad radii and separations up front.
  c.build();
  return c;
}

SystemConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    config_error("cannot open config file '" + path + "'");
  return parse_config(in);
}

System SystemConfig::build() const { return build(separation); }

System SystemConfig::build(double r12) const {
  dm_system* raw = nullptr;
  check(dm_system_create(radius1, eps1.get(), mu1.get(), radius2, eps2.get(), mu2.get(), eps.get(),
                         mu.get(), r12, &raw),
        "system");
  return System(raw);
}

} // namespace dispmed::cli
