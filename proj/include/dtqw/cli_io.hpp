// Copyright 2026 The dtqw Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line surface: argument parsing into a RunConfig, the five
// subcommands, and CSV/JSON emission.
//
// Exit codes: 0 success (including undefined Zak results), 1 internal
// numeric inconsistency, 2 usage error.

#pragma once

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dtqw/dtqw.hpp"

namespace dtqw::cli {

using nlohmann::json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Csv, Json };

/// Fully resolved parameters of one run. Echoed as JSON by --echo-config
/// and accepted back by --config.
struct RunConfig {
  std::string subcommand;
  Family family = Family::NonCommuting;
  double angle1 = 0.0;
  double angle2 = 0.0;
  std::optional<double> compare_angle1;
  std::optional<double> compare_angle2;
  std::optional<double> k_lo;
  std::optional<double> k_hi;
  int k_samples = 201;
  int grid = 101;
  double tol = 1e-6;
  std::int64_t steps = 7;
  std::vector<double> init{1.0, 0.0, 0.0, 0.0};
  std::string method = "quadrature";
  Format format = Format::Csv;
  std::string out;  // empty: standard output
  int jobs = 0;
  bool pi_closures = false;
};

inline json to_json(const RunConfig& c) {
  json j;
  j["subcommand"] = c.subcommand;
  j["family"] = std::string(family_name(c.family));
  j["angle1"] = c.angle1;
  j["angle2"] = c.angle2;
  j["compare_angle1"] = c.compare_angle1 ? json(*c.compare_angle1) : json(nullptr);
  j["compare_angle2"] = c.compare_angle2 ? json(*c.compare_angle2) : json(nullptr);
  j["k_lo"] = c.k_lo ? json(*c.k_lo) : json(nullptr);
  j["k_hi"] = c.k_hi ? json(*c.k_hi) : json(nullptr);
  j["k_samples"] = c.k_samples;
  j["grid"] = c.grid;
  j["tol"] = c.tol;
  j["steps"] = c.steps;
  j["init"] = c.init;
  j["method"] = c.method;
  j["format"] = c.format == Format::Csv ? "csv" : "json";
  j["out"] = c.out;
  j["jobs"] = c.jobs;
  j["pi_closures"] = c.pi_closures;
  return j;
}

inline RunConfig config_from_json(const json& j) {
  RunConfig c;
  try {
    c.subcommand = j.at("subcommand").get<std::string>();
    const auto fam = parse_family(j.at("family").get<std::string>());
    if (!fam) throw UsageError("config: unknown family");
    c.family = *fam;
    c.angle1 = j.at("angle1").get<double>();
    c.angle2 = j.at("angle2").get<double>();
    auto opt = [&](const char* key) -> std::optional<double> {
      if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
      return j.at(key).get<double>();
    };
    c.compare_angle1 = opt("compare_angle1");
    c.compare_angle2 = opt("compare_angle2");
    c.k_lo = opt("k_lo");
    c.k_hi = opt("k_hi");
    c.k_samples = j.at("k_samples").get<int>();
    c.grid = j.at("grid").get<int>();
    c.tol = j.at("tol").get<double>();
    c.steps = j.at("steps").get<std::int64_t>();
    c.init = j.at("init").get<std::vector<double>>();
    c.method = j.at("method").get<std::string>();
    c.format = j.at("format").get<std::string>() == "json" ? Format::Json : Format::Csv;
    c.out = j.value("out", std::string{});
    c.jobs = j.value("jobs", 0);
    c.pi_closures = j.value("pi_closures", false);
  } catch (const json::exception& e) {
    throw UsageError(std::string("config: ") + e.what());
  }
  return c;
}

// ---------------------------------------------------------------------------
// Formatting
// ---------------------------------------------------------------------------

/// 17 significant digits, '.' decimal separator.
inline std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

using Cell = std::variant<std::monostate, double, std::int64_t, bool, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

inline std::string csv_cell(const Cell& c) {
  struct Visitor {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(double x) const { return format_number(x); }
    std::string operator()(std::int64_t x) const { return std::to_string(x); }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{}, c);
}

inline json json_cell(const Cell& c) {
  struct Visitor {
    json operator()(std::monostate) const { return nullptr; }
    json operator()(double x) const { return x; }
    json operator()(std::int64_t x) const { return x; }
    json operator()(bool b) const { return b; }
    json operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{}, c);
}

/// Header row, comma separated, LF line endings.
inline void write_csv(std::ostream& os, const Table& t) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i) os << ',';
    os << t.columns[i];
  }
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      os << csv_cell(row[i]);
    }
    os << '\n';
  }
}

inline json table_json(const Table& t) {
  json arr = json::array();
  for (const auto& row : t.rows) {
    json obj = json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = json_cell(row[i]);
    arr.push_back(std::move(obj));
  }
  return arr;
}

inline void write_table(std::ostream& os, const Table& t, Format f) {
  if (f == Format::Csv) {
    write_csv(os, t);
  } else {
    os << table_json(t).dump(2) << '\n';
  }
}

/// Parses CSV produced by write_csv back into rows of strings.
inline std::vector<std::vector<std::string>> parse_csv(std::istream& is) {
  std::vector<std::vector<std::string>> out;
  std::string line;
  while (std::getline(is, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    out.push_back(std::move(cells));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

inline WalkProtocol protocol_of(const RunConfig& c) { return {c.family, c.angle1, c.angle2}; }

inline Table dispersion_table(const RunConfig& c) {
  if (c.k_samples < 2) throw UsageError("--k-samples must be >= 2");
  const double lo = c.k_lo.value_or(-kPi);
  const double hi = c.k_hi.value_or(kPi);
  if (!(lo < hi)) throw UsageError("--k-lo must be below --k-hi");
  const WalkProtocol p = protocol_of(c);
  Table t{{"k", "energy", "gap", "n_x", "n_y", "n_z"}, {}};
  for (double k : linspace(lo, hi, static_cast<std::size_t>(c.k_samples))) {
    const BlochPoint b = bloch_point(p, k);
    std::vector<Cell> row{k, b.energy, b.gap};
    if (b.n) {
      row.insert(row.end(), {b.n->x, b.n->y, b.n->z});
    } else {
      row.insert(row.end(), {std::monostate{}, std::monostate{}, std::monostate{}});
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

inline Table dirac_table(const RunConfig& c) {
  if (!(c.tol > 0.0)) throw UsageError("--tol must be positive");
  if (c.grid < 41 || c.grid % 2 == 0) throw UsageError("--grid must be odd and >= 41");
  if (c.k_samples < 2) throw UsageError("--k-samples must be >= 2");
  const ClosureScan scan = scan_closures(c.family, {c.grid, c.k_samples, c.tol, c.jobs});
  const auto& pts = c.pi_closures ? scan.pi_closures : scan.dirac;
  Table t{{"angle1", "angle2", "k_star", "residual_gap"}, {}};
  for (const auto& d : pts) t.rows.push_back({d.angle1, d.angle2, d.k_star, d.residual_gap});
  return t;
}

inline json zak_json(const ZakResult& r) {
  json j;
  auto val = [&](double v) { return r.defined ? json(v) : json(nullptr); };
  if (r.method == ZakMethod::Analytic) {
    j["z_plus"] = nullptr;
    j["z_minus"] = nullptr;
  } else {
    j["z_plus"] = val(r.z_plus);
    j["z_minus"] = val(r.z_minus);
  }
  j["z_total"] = val(r.z_total);
  j["method"] = std::string(method_name(r.method));
  j["defined"] = r.defined;
  j["k_lo"] = r.k_lo;
  j["k_hi"] = r.k_hi;
  return j;
}

inline ZakMethod resolve_method(const RunConfig& c) {
  const auto m = parse_method(c.method);
  if (!m) throw UsageError("--method must be quadrature, wilson or analytic");
  if (*m == ZakMethod::Analytic && c.family != Family::SplitStep) {
    throw UsageError("--method analytic is only available for --family splitstep");
  }
  return *m;
}

inline std::pair<double, double> zak_interval(const RunConfig& c) {
  const auto [dlo, dhi] = default_zak_interval(c.family);
  const double lo = c.k_lo.value_or(dlo);
  const double hi = c.k_hi.value_or(dhi);
  if (!(lo < hi)) throw UsageError("--k-lo must be below --k-hi");
  return {lo, hi};
}

inline ZakResult zak_for(const RunConfig& c) {
  const ZakMethod m = resolve_method(c);
  const auto [lo, hi] = zak_interval(c);
  const WalkProtocol p = protocol_of(c);
  switch (m) {
    case ZakMethod::Analytic: {
      ZakResult r;
      r.method = ZakMethod::Analytic;
      r.k_lo = lo;
      r.k_hi = hi;
      try {
        r.z_total = zak_splitstep_analytic(p.angle1, p.angle2);
        r.defined = true;
      } catch (const PoleError&) {
        r.defined = false;
      }
      return r;
    }
    case ZakMethod::Wilson:
      if (c.k_samples < 64) throw UsageError("--k-samples must be >= 64 for --method wilson");
      return zak_wilson_result(p, lo, hi, c.k_samples);
    case ZakMethod::Quadrature:
      return zak_quadrature(p, lo, hi);
  }
  return {};
}

inline Table landscape_table(const RunConfig& c) {
  if (c.grid < 2) throw UsageError("--grid must be >= 2");
  const ZakMethod m = resolve_method(c);
  if (m == ZakMethod::Wilson && c.k_samples < 64) {
    throw UsageError("--k-samples must be >= 64 for --method wilson");
  }
  const auto [lo, hi] = zak_interval(c);
  const AxisSpec axis{-kPi, kPi, c.grid};
  const LandscapeGrid g = zak_landscape(c.family, axis, axis, {lo, hi, m, c.k_samples, c.jobs});
  Table t{{"angle1", "angle2", "z_plus", "z_minus", "z_total", "defined"}, {}};
  for (std::size_t i = 0; i < g.axis1.size(); ++i) {
    for (std::size_t j = 0; j < g.axis2.size(); ++j) {
      const ZakResult& r = g.at(i, j);
      const bool per_band = r.defined && m != ZakMethod::Analytic;
      t.rows.push_back({g.axis1[i], g.axis2[j], per_band ? Cell{r.z_plus} : Cell{},
                        per_band ? Cell{r.z_minus} : Cell{}, r.defined ? Cell{r.z_total} : Cell{},
                        r.defined});
    }
  }
  return t;
}

/// Parsed and renormalized --init spinor. Accepts |norm - 1| <= 1e-6 so
/// that 7-digit decimal input such as 0.7071068 is usable.
inline Spinor init_spinor(const std::vector<double>& v) {
  if (v.size() != 4) throw UsageError("--init expects four numbers: re,im,re,im");
  Spinor s{C64{v[0], v[1]}, C64{v[2], v[3]}};
  const double n = s.norm();
  if (!(std::abs(n - 1.0) <= 1e-6)) throw UsageError("--init spinor is not normalized");
  return C64{1.0 / n, 0.0} * s;
}

struct SimulateOutput {
  Table distribution;
  std::optional<json> phase;
};

inline SimulateOutput simulate(const RunConfig& c) {
  if (c.steps < 0) throw UsageError("--steps must be >= 0");
  const Spinor s0 = init_spinor(c.init);
  const WalkState init = initial_state(0, s0);
  const WalkState fin = evolve(init, protocol_of(c), c.steps);
  SimulateOutput out;
  out.distribution.columns = {"x", "probability"};
  const Distribution d = distribution(fin);
  for (std::size_t i = 0; i < d.positions.size(); ++i) {
    out.distribution.rows.push_back({d.positions[i], d.probabilities[i]});
  }
  if (c.compare_angle1 || c.compare_angle2) {
    const WalkProtocol other(c.family, c.compare_angle1.value_or(c.angle1),
                             c.compare_angle2.value_or(c.angle2));
    const WalkState fin2 = evolve(init, other, c.steps);
    json j;
    j["overlap_modulus"] = std::abs(overlap(fin, fin2));
    try {
      j["overlap_phase"] = overlap_phase(fin, fin2);
      j["pure_phase"] = true;
    } catch (const NotPurePhase&) {
      j["overlap_phase"] = nullptr;
      j["pure_phase"] = false;
    }
    out.phase = std::move(j);
  }
  return out;
}

/// Runs a resolved configuration, writing data to `out` and diagnostics
/// (and the simulate overlap phase when data goes to stdout as CSV) to `aux`.
inline int run(const RunConfig& c, std::ostream& out, std::ostream& aux) {
  try {
    if (c.subcommand == "dispersion") {
      write_table(out, dispersion_table(c), c.format);
    } else if (c.subcommand == "dirac-scan") {
      write_table(out, dirac_table(c), c.format);
    } else if (c.subcommand == "zak") {
      const ZakResult r = zak_for(c);
      if (c.format == Format::Json) {
        out << zak_json(r).dump(2) << '\n';
      } else {
        Table t{{"z_plus", "z_minus", "z_total", "method", "defined"}, {}};
        const bool per_band = r.defined && r.method != ZakMethod::Analytic;
        t.rows.push_back({per_band ? Cell{r.z_plus} : Cell{}, per_band ? Cell{r.z_minus} : Cell{},
                          r.defined ? Cell{r.z_total} : Cell{},
                          std::string(method_name(r.method)), r.defined});
        write_csv(out, t);
      }
    } else if (c.subcommand == "zak-landscape") {
      write_table(out, landscape_table(c), c.format);
    } else if (c.subcommand == "simulate") {
      SimulateOutput s = simulate(c);
      if (c.format == Format::Json) {
        json j;
        j["distribution"] = table_json(s.distribution);
        if (s.phase) j.update(*s.phase);
        out << j.dump(2) << '\n';
      } else {
        write_csv(out, s.distribution);
        if (s.phase) {
          if (c.out.empty()) {
            aux << s.phase->dump() << '\n';
          } else {
            std::ofstream side(c.out + ".phase.json");
            side << s.phase->dump(2) << '\n';
          }
        }
      }
    } else {
      throw UsageError("unknown subcommand: " + c.subcommand);
    }
  } catch (const UsageError& e) {
    aux << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const dtqw::InvalidArgument& e) {
    aux << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    aux << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// Argument parsing
// ---------------------------------------------------------------------------

struct AngleFlag {
  std::optional<double> radians;
  std::optional<double> pi_fraction;

  std::optional<double> value(const char* name) const {
    if (radians && pi_fraction) {
      throw UsageError(std::string("give either --") + name + " or --" + name + "-pi, not both");
    }
    if (radians) return radians;
    if (pi_fraction) return *pi_fraction * kPi;
    return std::nullopt;
  }
};

struct ParsedArgs {
  RunConfig config;
  bool echo_config = false;
  bool help = false;
  std::string help_text;
};

/// Parses argv into a RunConfig. Throws UsageError on bad flags.
inline ParsedArgs parse_args(int argc, const char* const* argv) {
  CLI::App app{"Band structure, Dirac points, Zak phases and walk simulation for 1D "
               "discrete-time quantum walks"};
  app.require_subcommand(1);

  std::string family = "noncommuting";
  AngleFlag theta, phi, theta1, theta2, cmp_theta, cmp_phi;
  std::optional<double> k_lo, k_hi;
  std::optional<int> k_samples, grid, jobs;
  std::optional<double> tol;
  std::int64_t steps = 7;
  std::string init = "1,0,0,0";
  std::string method = "quadrature";
  std::string format;
  std::string out;
  std::string config_path;
  bool echo = false;
  bool pi_closures = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--family", family, "single | splitstep | noncommuting");
    auto angle = [&](const char* name, AngleFlag& f, const char* what) {
      sub->add_option(std::string("--") + name, f.radians, std::string(what) + " (radians)");
      sub->add_option(std::string("--") + name + "-pi", f.pi_fraction,
                      std::string(what) + " as a multiple of pi");
    };
    angle("theta", theta, "theta");
    angle("phi", phi, "phi");
    angle("theta1", theta1, "split-step theta1");
    angle("theta2", theta2, "split-step theta2");
    sub->add_option("--k-lo", k_lo, "lower quasi-momentum");
    sub->add_option("--k-hi", k_hi, "upper quasi-momentum");
    sub->add_option("--k-samples", k_samples, "momentum samples");
    sub->add_option("--jobs", jobs, "worker threads (default: available parallelism)");
    sub->add_option("--format", format, "csv | json");
    sub->add_option("--out", out, "output file (default: standard output)");
    sub->add_option("--config", config_path, "rerun a configuration echoed by --echo-config");
    sub->add_flag("--echo-config", echo, "print the resolved configuration as JSON to stderr");
  };

  auto* disp = app.add_subcommand("dispersion", "E(k) and n(k) along the Brillouin zone");
  add_common(disp);
  auto* scan = app.add_subcommand("dirac-scan", "gap closures over the coin-angle torus");
  add_common(scan);
  scan->add_option("--grid", grid, "grid points per axis (odd, >= 41)");
  scan->add_option("--tol", tol, "closure tolerance on the quasi-energy");
  scan->add_flag("--pi-closures", pi_closures, "report E = pi closures instead");
  auto* zak = app.add_subcommand("zak", "Zak phase of both bands");
  add_common(zak);
  zak->add_option("--method", method, "quadrature | wilson | analytic");
  auto* land = app.add_subcommand("zak-landscape", "Zak phase over the coin-angle grid");
  add_common(land);
  land->add_option("--grid", grid, "grid points per axis");
  land->add_option("--method", method, "quadrature | wilson | analytic");
  auto* sim = app.add_subcommand("simulate", "position-space walk evolution");
  add_common(sim);
  sim->add_option("--steps", steps, "number of steps");
  sim->add_option("--init", init, "initial coin spinor \"re,im,re,im\"");
  sim->add_option("--compare-theta", cmp_theta.radians, "second evolution theta (radians)");
  sim->add_option("--compare-theta-pi", cmp_theta.pi_fraction, "second evolution theta / pi");
  sim->add_option("--compare-phi", cmp_phi.radians, "second evolution phi (radians)");
  sim->add_option("--compare-phi-pi", cmp_phi.pi_fraction, "second evolution phi / pi");

  ParsedArgs parsed;
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    parsed.help = true;
    parsed.help_text = app.help();
    return parsed;
  } catch (const CLI::CallForAllHelp&) {
    parsed.help = true;
    parsed.help_text = app.help("", CLI::AppFormatMode::All);
    return parsed;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  CLI::App* chosen = app.get_subcommands().front();
  parsed.echo_config = echo;
  if (!config_path.empty()) {
    std::ifstream is(config_path);
    if (!is) throw UsageError("cannot open --config file " + config_path);
    json j;
    try {
      is >> j;
    } catch (const json::exception& e) {
      throw UsageError(std::string("--config: ") + e.what());
    }
    parsed.config = config_from_json(j);
    if (parsed.config.subcommand != chosen->get_name()) {
      throw UsageError("--config was written for subcommand " + parsed.config.subcommand);
    }
    return parsed;
  }

  RunConfig& c = parsed.config;
  c.subcommand = chosen->get_name();
  const auto fam = parse_family(family);
  if (!fam) throw UsageError("--family must be single, splitstep or noncommuting");
  c.family = *fam;

  const auto t = theta.value("theta");
  const auto p = phi.value("phi");
  const auto t1 = theta1.value("theta1");
  const auto t2 = theta2.value("theta2");
  const auto ct = cmp_theta.value("compare-theta");
  const auto cp = cmp_phi.value("compare-phi");
  switch (c.family) {
    case Family::Single:
      if (p || t1 || t2 || cp) throw UsageError("--family single takes only --theta");
      c.angle1 = t.value_or(0.0);
      c.angle2 = 0.0;
      break;
    case Family::NonCommuting:
      if (t1 || t2) throw UsageError("--family noncommuting takes --theta and --phi");
      c.angle1 = t.value_or(0.0);
      c.angle2 = p.value_or(0.0);
      break;
    case Family::SplitStep:
      if (t || p || ct || cp) throw UsageError("--family splitstep takes --theta1 and --theta2");
      c.angle1 = t1.value_or(0.0);
      c.angle2 = t2.value_or(0.0);
      break;
  }
  c.compare_angle1 = ct;
  c.compare_angle2 = cp;
  c.k_lo = k_lo;
  c.k_hi = k_hi;
  if (c.subcommand == "dirac-scan") {
    c.grid = grid.value_or(201);
    c.k_samples = k_samples.value_or(129);
  } else if (c.subcommand == "zak-landscape") {
    c.grid = grid.value_or(101);
    c.k_samples = k_samples.value_or(2048);
  } else if (c.subcommand == "zak") {
    c.k_samples = k_samples.value_or(2048);
  } else {
    c.k_samples = k_samples.value_or(201);
  }
  c.tol = tol.value_or(1e-6);
  c.steps = steps;
  {
    std::vector<double> v;
    std::stringstream ss(init);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        v.push_back(std::stod(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw UsageError("--init: cannot parse '" + item + "'");
      }
    }
    c.init = v;
    if (c.subcommand == "simulate") init_spinor(c.init);
  }
  c.method = method;
  if (format.empty()) {
    c.format = (c.subcommand == "zak") ? Format::Json : Format::Csv;
    if (c.subcommand == "dirac-scan") c.format = Format::Json;
  } else if (format == "csv") {
    c.format = Format::Csv;
  } else if (format == "json") {
    c.format = Format::Json;
  } else {
    throw UsageError("--format must be csv or json");
  }
  c.out = out;
  c.jobs = jobs.value_or(0);
  c.pi_closures = pi_closures;
  return parsed;
}

/// Entry point shared by the executable and the CLI tests.
inline int main_with_args(int argc, const char* const* argv, std::ostream& out,
                          std::ostream& err) {
  ParsedArgs parsed;
  try {
    parsed = parse_args(argc, argv);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (parsed.help) {
    out << parsed.help_text;
    return kExitOk;
  }
  if (parsed.echo_config) err << to_json(parsed.config).dump() << '\n';
  if (parsed.config.out.empty()) return run(parsed.config, out, err);
  std::ofstream file(parsed.config.out, std::ios::binary);
  if (!file) {
    err << "error: cannot open " << parsed.config.out << '\n';
    return kExitUsage;
  }
  return run(parsed.config, file, err);
}

}  // namespace dtqw::cli
