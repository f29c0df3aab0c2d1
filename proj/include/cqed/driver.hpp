// Copyright 2026 The cqed-dit Authors
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

// Batch driver behind the command line tool: configuration, single runs,
// sweeps and the canned figure reproductions.

#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "cqed/features.hpp"
#include "cqed/io.hpp"
#include "cqed/iof.hpp"
#include "cqed/spectra.hpp"
#include "cqed/spectrum.hpp"
#include "cqed/version.hpp"

namespace cqed::driver {

using nlohmann::json;
namespace fs = std::filesystem;

/// Invalid or unreadable configuration; maps to exit status 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum ExitCode : int { kSuccess = 0, kConfigError = 2, kNumericalError = 3 };

enum class MethodSelection { IPM, IOF, both };

inline std::string_view to_string(MethodSelection m) {
  switch (m) {
    case MethodSelection::IPM: return "IPM";
    case MethodSelection::IOF: return "IOF";
    case MethodSelection::both: return "both";
  }
  return "?";
}

struct GridSpec {
  double min;
  double max;
  std::size_t points;
};

struct SweepSpec {
  std::string parameter;
  std::vector<double> values;
};

struct RunConfig {
  SystemParams params;
  std::optional<GridSpec> grid;     ///< default: FrequencyGrid::default_for per point
  std::size_t grid_points = 2001;   ///< point count of the default grid
  MethodSelection method = MethodSelection::both;
  Port port = Port::through;
  Normalization normalization = Normalization::unit_max;
  fs::path output_dir = "out";
  std::optional<SweepSpec> sweep;
  std::optional<double> g_over_kappa;            ///< g tied to kappa_me
  std::optional<double> delta_over_gamma_total;  ///< delta tied to Gamma
  bool plot = false;
  unsigned jobs = 1;
};

inline const std::vector<std::string>& sweepable_parameters() {
  static const std::vector<std::string> names{"gamma_total", "kappa0", "kappa1", "gamma",
                                              "g",           "delta",  "pump",   "n_max"};
  return names;
}

/// Parameter point after applying the coupling rules.
inline SystemParams resolve_params(const RunConfig& cfg, SystemParams p) {
  if (cfg.g_over_kappa) p.g = *cfg.g_over_kappa * p.kappa_me();
  if (cfg.delta_over_gamma_total) p.delta = *cfg.delta_over_gamma_total * p.gamma_total();
  return p;
}

inline SystemParams with_sweep_value(const RunConfig& cfg, const std::string& name, double v) {
  SystemParams p = cfg.params;
  if (name == "gamma_total") p.set_gamma_total(v);
  else if (name == "kappa0") p.kappa0 = v;
  else if (name == "kappa1") p.kappa1 = v;
  else if (name == "gamma") p.gamma = v;
  else if (name == "g") p.g = v;
  else if (name == "delta") p.delta = v;
  else if (name == "pump") p.pump = v;
  else if (name == "n_max") p.n_max = static_cast<int>(v);
  else throw ConfigError("sweep.parameter: unknown parameter '" + name + "'");
  return resolve_params(cfg, p);
}

inline FrequencyGrid grid_for(const RunConfig& cfg, const SystemParams& p) {
  if (cfg.grid) return FrequencyGrid::uniform(cfg.grid->min, cfg.grid->max, cfg.grid->points);
  return FrequencyGrid::default_for(p, cfg.grid_points);
}

// ---------------------------------------------------------------------------
// JSON <-> config

inline json params_to_json(const SystemParams& p) {
  json j{{"gamma", p.gamma}, {"kappa0", p.kappa0}, {"kappa1", p.kappa1},
         {"g", p.g},         {"delta", p.delta},   {"pump", p.pump},
         {"n_max", p.n_max}, {"coupling_phase", p.coupling_phase}};
  j["kappa_me"] = p.kappa_me_override ? json(*p.kappa_me_override) : json(nullptr);
  j["gamma_total"] = p.gamma_total();
  return j;
}

inline json config_to_json(const RunConfig& c) {
  json j;
  j["params"] = params_to_json(c.params);
  j["params"].erase("gamma_total");
  if (c.grid) j["grid"] = {{"min", c.grid->min}, {"max", c.grid->max}, {"points", c.grid->points}};
  j["grid_points"] = c.grid_points;
  j["method"] = std::string(to_string(c.method));
  j["port"] = std::string(to_string(c.port));
  j["normalization"] = std::string(to_string(c.normalization));
  if (c.sweep) j["sweep"] = {{"parameter", c.sweep->parameter}, {"values", c.sweep->values}};
  if (c.g_over_kappa) j["g_over_kappa"] = *c.g_over_kappa;
  if (c.delta_over_gamma_total) j["delta_over_gamma_total"] = *c.delta_over_gamma_total;
  j["plot"] = c.plot;
  return j;
}

namespace detail {

inline double number_field(const json& obj, const std::string& key, const std::string& where) {
  const json& v = obj.at(key);
  if (!v.is_number()) throw ConfigError(where + key + ": expected a number");
  return v.get<double>();
}

inline void reject_unknown(const json& obj, std::initializer_list<const char*> allowed,
                           const std::string& where) {
  for (const auto& [key, _] : obj.items()) {
    if (std::find_if(allowed.begin(), allowed.end(),
                     [&](const char* a) { return key == a; }) == allowed.end()) {
      throw ConfigError(where + key + ": unknown field");
    }
  }
}

}  // namespace detail

/// Builds a RunConfig from JSON. Accepts a spectrum sidecar as well, through
/// its embedded "config" object.
inline RunConfig config_from_json(const json& root) {
  const json& j = root.contains("config") && root.contains("artifact") ? root.at("config") : root;
  if (!j.is_object()) throw ConfigError("config: expected a JSON object");
  detail::reject_unknown(j,
                         {"params", "grid", "grid_points", "method", "port", "normalization",
                          "sweep", "g_over_kappa", "delta_over_gamma_total", "plot", "output_dir"},
                         "");
  RunConfig c;
  try {
    if (j.contains("params")) {
      const json& p = j.at("params");
      if (!p.is_object()) throw ConfigError("params: expected an object");
      detail::reject_unknown(p,
                             {"gamma", "kappa0", "kappa1", "g", "delta", "pump", "n_max",
                              "coupling_phase", "kappa_me", "gamma_total"},
                             "params.");
      for (const char* key : {"gamma", "kappa0", "kappa1", "g", "delta", "pump",
                              "coupling_phase"}) {
        if (!p.contains(key)) continue;
        const double v = detail::number_field(p, key, "params.");
        const std::string k = key;
        if (k == "gamma") c.params.gamma = v;
        else if (k == "kappa0") c.params.kappa0 = v;
        else if (k == "kappa1") c.params.kappa1 = v;
        else if (k == "g") c.params.g = v;
        else if (k == "delta") c.params.delta = v;
        else if (k == "pump") c.params.pump = v;
        else c.params.coupling_phase = v;
      }
      if (p.contains("gamma_total") && !p.at("gamma_total").is_null()) {
        if (p.contains("kappa1")) {
          const double expected = detail::number_field(p, "gamma_total", "params.");
          if (std::abs(expected - c.params.gamma_total()) > 1e-12 * std::max(1.0, expected)) {
            throw ConfigError("params.gamma_total: inconsistent with kappa0 and kappa1");
          }
        } else {
          c.params.set_gamma_total(detail::number_field(p, "gamma_total", "params."));
        }
      }
      if (p.contains("n_max")) {
        if (!p.at("n_max").is_number_integer()) {
          throw ConfigError("params.n_max: expected an integer");
        }
        c.params.n_max = p.at("n_max").get<int>();
      }
      if (p.contains("kappa_me") && !p.at("kappa_me").is_null()) {
        c.params.kappa_me_override = detail::number_field(p, "kappa_me", "params.");
      }
    }
    if (j.contains("grid")) {
      const json& g = j.at("grid");
      detail::reject_unknown(g, {"min", "max", "points"}, "grid.");
      GridSpec spec{detail::number_field(g, "min", "grid."), detail::number_field(g, "max", "grid."),
                    0};
      if (!g.at("points").is_number_unsigned()) throw ConfigError("grid.points: expected a count");
      spec.points = g.at("points").get<std::size_t>();
      c.grid = spec;
    }
    if (j.contains("grid_points")) {
      if (!j.at("grid_points").is_number_unsigned()) {
        throw ConfigError("grid_points: expected a count");
      }
      c.grid_points = j.at("grid_points").get<std::size_t>();
    }
    if (j.contains("method")) {
      const std::string m = j.at("method").get<std::string>();
      if (m == "IPM") c.method = MethodSelection::IPM;
      else if (m == "IOF") c.method = MethodSelection::IOF;
      else if (m == "both") c.method = MethodSelection::both;
      else throw ConfigError("method: expected IPM, IOF or both");
    }
    if (j.contains("port")) c.port = parse_port(j.at("port").get<std::string>());
    if (j.contains("normalization")) {
      c.normalization = parse_normalization(j.at("normalization").get<std::string>());
    }
    if (j.contains("sweep")) {
      const json& s = j.at("sweep");
      detail::reject_unknown(s, {"parameter", "values"}, "sweep.");
      SweepSpec spec{s.at("parameter").get<std::string>(), s.at("values").get<std::vector<double>>()};
      c.sweep = spec;
    }
    if (j.contains("g_over_kappa")) c.g_over_kappa = detail::number_field(j, "g_over_kappa", "");
    if (j.contains("delta_over_gamma_total")) {
      c.delta_over_gamma_total = detail::number_field(j, "delta_over_gamma_total", "");
    }
    if (j.contains("plot")) c.plot = j.at("plot").get<bool>();
    if (j.contains("output_dir")) c.output_dir = j.at("output_dir").get<std::string>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  } catch (const InvalidParameter& e) {
    throw ConfigError(e.what());
  }
  return c;
}

/// Checks everything that can be checked before any numerics run.
inline void validate_config(const RunConfig& c) {
  auto check_point = [&](const SystemParams& p, const std::string& where) {
    try {
      p.validate();
    } catch (const InvalidParameter& e) {
      throw ConfigError(where + e.what());
    }
    if (c.method != MethodSelection::IOF) {
      if (!(p.pump > 0.0)) throw ConfigError(where + "params.pump: IPM needs pump > 0");
      if (!(p.pump < p.kappa_me())) {
        throw ConfigError(where + "params.pump: must be below kappa_me = " +
                          std::to_string(p.kappa_me()));
      }
    }
  };
  if (c.grid) {
    if (c.grid->points < 3) throw ConfigError("grid.points: must be >= 3");
    if (!(c.grid->max > c.grid->min)) throw ConfigError("grid.max: must exceed grid.min");
  } else if (c.grid_points < 3) {
    throw ConfigError("grid_points: must be >= 3");
  }
  if (c.jobs == 0) throw ConfigError("jobs: must be >= 1");
  if (c.sweep) {
    const auto& names = sweepable_parameters();
    if (std::find(names.begin(), names.end(), c.sweep->parameter) == names.end()) {
      throw ConfigError("sweep.parameter: unknown parameter '" + c.sweep->parameter + "'");
    }
    if (c.sweep->values.empty()) throw ConfigError("sweep.values: must not be empty");
    for (std::size_t k = 0; k < c.sweep->values.size(); ++k) {
      check_point(with_sweep_value(c, c.sweep->parameter, c.sweep->values[k]),
                  "sweep.values[" + std::to_string(k) + "]: ");
    }
  } else {
    check_point(resolve_params(c, c.params), "");
  }
}

inline RunConfig load_config(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path.string() + ": cannot open");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
  return config_from_json(j);
}

/// Parses MIN:MAX:POINTS.
inline GridSpec parse_grid_spec(const std::string& text) {
  std::stringstream ss(text);
  std::string a, b, n;
  if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':') || !std::getline(ss, n)) {
    throw ConfigError("--grid: expected MIN:MAX:POINTS");
  }
  try {
    std::size_t used = 0;
    GridSpec g{std::stod(a), std::stod(b), 0};
    const long long pts = std::stoll(n, &used);
    if (used != n.size() || pts < 3) throw ConfigError("--grid: POINTS must be an integer >= 3");
    g.points = static_cast<std::size_t>(pts);
    return g;
  } catch (const std::logic_error&) {
    throw ConfigError("--grid: expected MIN:MAX:POINTS");
  }
}

// ---------------------------------------------------------------------------
// Runs

inline std::string optional_kind(const std::optional<FeatureKind>& k) {
  return k ? std::string(to_string(*k)) : std::string();
}

inline json metrics_to_json(const MethodMetrics& m) {
  auto opt = [](const std::optional<double>& v) { return v ? json(*v) : json(nullptr); };
  json j{{"dit_value", opt(m.dit_value)},
         {"dit_fwhm", opt(m.dit_fwhm)},
         {"splitting", opt(m.splitting)},
         {"dit_kind", m.dit_kind ? json(std::string(to_string(*m.dit_kind))) : json(nullptr)}};
  j["error"] = m.error ? json(*m.error) : json(nullptr);
  return j;
}

inline json report_to_json(const ComparisonReport& r) {
  auto opt = [](const std::optional<double>& v) { return v ? json(*v) : json(nullptr); };
  return json{{"iof", metrics_to_json(r.iof)},
              {"ipm", metrics_to_json(r.ipm)},
              {"dit_peak_ratio", opt(r.dit_peak_ratio)},
              {"fwhm_discrepancy_pct", opt(r.fwhm_discrepancy_pct)},
              {"port", std::string(to_string(r.port))},
              {"normalization", std::string(to_string(r.normalization))},
              {"best_pump", opt(r.best_pump)}};
}

/// Result of one parameter point. A method that fails numerically leaves its
/// spectrum empty and its metrics carrying the error name; the other method's
/// results are kept.
struct PointResult {
  SystemParams params;
  std::optional<Spectrum> iof;
  std::optional<Spectrum> ipm;
  ComparisonReport report;
  std::optional<std::string> failure;  ///< first numerical failure, with message
};

inline PointResult compute_point(const RunConfig& cfg, const SystemParams& p) {
  const FrequencyGrid grid = grid_for(cfg, p);
  PointResult r{p, std::nullopt, std::nullopt, {}, std::nullopt};
  MethodMetrics iof_missing, ipm_missing;
  iof_missing.error = ipm_missing.error = "NotComputed";
  auto attempt = [&](auto&& fn, MethodMetrics& missing) {
    try {
      fn();
    } catch (const Error& e) {
      missing.error = e.name();
      if (!r.failure) r.failure = e.what();
    }
  };
  if (cfg.method != MethodSelection::IPM) {
    attempt([&] { r.iof = normalize(iof_spectrum(p, grid, cfg.port), cfg.normalization); },
            iof_missing);
  }
  if (cfg.method != MethodSelection::IOF) {
    attempt([&] { r.ipm = ipm_transmission(p, grid, cfg.normalization); }, ipm_missing);
  }

  const ComparisonOptions opt;
  if (r.iof && r.ipm) {
    r.report = compare_methods(*r.iof, *r.ipm, opt);
  } else {
    r.report.port = cfg.port;
    r.report.normalization = cfg.normalization;
    r.report.iof = r.iof ? cqed::detail::method_metrics(*r.iof, opt) : iof_missing;
    r.report.ipm = r.ipm ? cqed::detail::method_metrics(*r.ipm, opt) : ipm_missing;
  }
  return r;
}

inline json sidecar_json(const RunConfig& cfg, const Spectrum& s, double seconds) {
  RunConfig single = cfg;
  single.sweep.reset();
  single.g_over_kappa.reset();
  single.delta_over_gamma_total.reset();
  single.params = s.params;
  single.method = s.method == Method::IPM ? MethodSelection::IPM : MethodSelection::IOF;
  single.grid = GridSpec{s.grid.min(), s.grid.max(), s.grid.size()};
  json j{{"artifact", kArtifactName},
         {"version", kVersion},
         {"method", std::string(to_string(s.method))},
         {"channel", std::string(to_string(s.channel))},
         {"port", std::string(to_string(cfg.port))},
         {"normalization", std::string(to_string(s.normalization))},
         {"params", params_to_json(s.params)},
         {"grid", {{"min", s.grid.min()}, {"max", s.grid.max()}, {"points", s.grid.size()}}},
         {"wall_clock_seconds", seconds},
         {"config", config_to_json(single)}};
  return j;
}

inline std::string gnuplot_script(bool iof, bool ipm) {
  std::string s =
      "set datafile separator ','\n"
      "set key autotitle columnhead\n"
      "set xlabel 'offset from cavity (gamma)'\n"
      "set ylabel 'transmission'\n"
      "set terminal svg size 800,500\n"
      "set output 'spectra.svg'\n"
      "plot ";
  if (iof) s += "'spectrum_iof.csv' using 1:2 with lines title 'IOF'";
  if (iof && ipm) s += ", ";
  if (ipm) s += "'spectrum_ipm.csv' using 1:2 with lines title 'IPM'";
  return s + "\n";
}

/// Writes the files of one computed point into `dir`.
inline void write_point(const RunConfig& cfg, const PointResult& r, const fs::path& dir,
                        double seconds) {
  fs::create_directories(dir);
  for (const auto* s : {r.iof ? &*r.iof : nullptr, r.ipm ? &*r.ipm : nullptr}) {
    if (!s) continue;
    const std::string stem = s->method == Method::IOF ? "spectrum_iof" : "spectrum_ipm";
    io::write_atomic(dir / (stem + ".csv"), io::spectrum_csv(*s));
    io::write_atomic(dir / (stem + ".json"), sidecar_json(cfg, *s, seconds).dump(2) + "\n");
  }
  json cmp = report_to_json(r.report);
  cmp["params"] = params_to_json(r.params);
  cmp["method"] = std::string(to_string(cfg.method));
  cmp["version"] = kVersion;
  io::write_atomic(dir / "comparison.json", cmp.dump(2) + "\n");
  if (cfg.plot) io::write_atomic(dir / "plot.gp", gnuplot_script(r.iof.has_value(), r.ipm.has_value()));
}

inline std::string describe(const SystemParams& p) {
  std::ostringstream os;
  os << "gamma=" << p.gamma << " kappa0=" << p.kappa0 << " kappa1=" << p.kappa1 << " g=" << p.g
     << " delta=" << p.delta << " pump=" << p.pump << " n_max=" << p.n_max;
  return os.str();
}

/// Single spectrum run. Returns the process exit status.
inline int run_spectrum(const RunConfig& cfg, std::ostream& log = std::cerr) {
  validate_config(cfg);
  const SystemParams p = resolve_params(cfg, cfg.params);
  const auto t0 = std::chrono::steady_clock::now();
  const PointResult r = compute_point(cfg, p);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  write_point(cfg, r, cfg.output_dir, secs);
  if (r.failure) {
    log << "numerical failure at " << describe(p) << ": " << *r.failure << "\n";
    return kNumericalError;
  }
  return kSuccess;
}

/// Runs fn(k) for k in [0, count) on `jobs` workers.
inline void parallel_for(unsigned jobs, std::size_t count,
                         const std::function<void(std::size_t)>& fn) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < count; k = next++) fn(k);
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
}

inline const char* kSummaryHeader =
    "sweep_value,dit_iof,dit_ipm,fwhm_iof,fwhm_ipm,splitting_iof,splitting_ipm,dit_peak_ratio,"
    "fwhm_discrepancy_pct\n";

inline std::string point_dir_name(std::size_t k) {
  std::string s = std::to_string(k);
  return "point_" + std::string(s.size() < 3 ? 3 - s.size() : 0, '0') + s;
}

/// Parameter sweep. Per-point failures are recorded in the summary by error
/// name; the status is 0 when at least one point succeeded and 3 otherwise.
inline int run_sweep(const RunConfig& cfg, std::ostream& log = std::cerr) {
  if (!cfg.sweep) throw ConfigError("sweep: missing sweep specification");
  validate_config(cfg);
  const auto& values = cfg.sweep->values;
  std::vector<std::string> rows(values.size());
  std::vector<char> ok(values.size(), 0);
  std::vector<std::string> failures(values.size());

  parallel_for(cfg.jobs, values.size(), [&](std::size_t k) {
    const SystemParams p = with_sweep_value(cfg, cfg.sweep->parameter, values[k]);
    const std::string v = io::format_double(values[k]);
    const auto t0 = std::chrono::steady_clock::now();
    try {
      const PointResult r = compute_point(cfg, p);
      const double secs =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      write_point(cfg, r, cfg.output_dir / point_dir_name(k), secs);
      auto cell = [](const std::optional<double>& x, const MethodMetrics& m) {
        return io::format_cell(x, m.error.value_or("NA"));
      };
      const auto& rep = r.report;
      const std::string pair_err =
          rep.iof.error ? *rep.iof.error : rep.ipm.error ? *rep.ipm.error : "NA";
      rows[k] = v + "," + cell(rep.iof.dit_value, rep.iof) + "," + cell(rep.ipm.dit_value, rep.ipm) +
                "," + cell(rep.iof.dit_fwhm, rep.iof) + "," + cell(rep.ipm.dit_fwhm, rep.ipm) + "," +
                cell(rep.iof.splitting, rep.iof) + "," + cell(rep.ipm.splitting, rep.ipm) + "," +
                io::format_cell(rep.dit_peak_ratio, pair_err) + "," +
                io::format_cell(rep.fwhm_discrepancy_pct, pair_err) + "\n";
      if (r.failure) failures[k] = "numerical failure at " + describe(p) + ": " + *r.failure;
      else ok[k] = 1;
    } catch (const Error& e) {
      failures[k] = "numerical failure at " + describe(p) + ": " + e.what();
      std::string row = v;
      for (int c = 0; c < 8; ++c) row += "," + e.name();
      rows[k] = row + "\n";
    }
  });

  std::string summary = kSummaryHeader;
  for (const auto& r : rows) summary += r;
  io::write_atomic(cfg.output_dir / "summary.csv", summary);
  json meta{{"artifact", kArtifactName}, {"version", kVersion}, {"config", config_to_json(cfg)}};
  io::write_atomic(cfg.output_dir / "summary.json", meta.dump(2) + "\n");

  bool any = false;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (ok[k]) any = true;
    else log << failures[k] << "\n";
  }
  return any ? kSuccess : kNumericalError;
}

// ---------------------------------------------------------------------------
// Canned figure configurations

enum class FigureId { fig1, fig2, fig3 };

inline FigureId parse_figure(const std::string& s) {
  if (s == "fig1") return FigureId::fig1;
  if (s == "fig2") return FigureId::fig2;
  if (s == "fig3") return FigureId::fig3;
  throw ConfigError("figure: expected fig1, fig2 or fig3, got '" + s + "'");
}

inline const std::vector<double>& figure_pumps() {
  static const std::vector<double> v{1.0, 2.0, 2.5, 3.5};
  return v;
}

/// Base configuration shared by the figures: lossless critically coupled
/// cavity, g = kappa_me / 2.
inline RunConfig figure_base(const RunConfig& overrides) {
  RunConfig c = overrides;
  c.params = SystemParams{};
  c.params.gamma = 1.0;
  c.params.kappa0 = 0.0;
  c.params.set_gamma_total(15.0);
  c.params.pump = 2.5;
  c.params.n_max = overrides.params.n_max;
  c.g_over_kappa = 0.5;
  c.delta_over_gamma_total.reset();
  c.method = MethodSelection::both;
  return c;
}

/// Sub-runs of a figure: (config, output directory).
inline std::vector<RunConfig> figure_configs(FigureId id, const RunConfig& overrides) {
  const fs::path root = overrides.output_dir / "figures";
  std::vector<RunConfig> out;
  RunConfig c = figure_base(overrides);
  switch (id) {
    case FigureId::fig1:
      c.sweep = SweepSpec{"pump", figure_pumps()};
      c.output_dir = root / "fig1";
      out.push_back(c);
      break;
    case FigureId::fig2:
      for (double pump : figure_pumps()) {
        RunConfig s = c;
        s.params.pump = pump;
        s.sweep = SweepSpec{"gamma_total", {5, 10, 15, 20, 25, 30, 35}};
        s.output_dir = root / "fig2" / ("pump_" + io::format_double(pump));
        out.push_back(s);
      }
      break;
    case FigureId::fig3:
      c.delta_over_gamma_total = 1.5;
      c.sweep = SweepSpec{"gamma_total", {10, 15, 20, 25, 30, 35}};
      c.output_dir = root / "fig3";
      out.push_back(c);
      break;
  }
  return out;
}

inline int reproduce_figure(FigureId id, const RunConfig& overrides, std::ostream& log = std::cerr) {
  int status = kSuccess;
  for (const RunConfig& c : figure_configs(id, overrides)) {
    status = std::max(status, run_sweep(c, log));
  }
  return status;
}

}  // namespace cqed::driver
