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

#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "cqed/iof.hpp"
#include "cqed/spectra.hpp"
#include "cqed/spectrum.hpp"

namespace cqed {

enum class FeatureKind { peak, dip };

inline std::string_view to_string(FeatureKind k) { return k == FeatureKind::peak ? "peak" : "dip"; }

struct SpectralFeature {
  FeatureKind kind;
  std::size_t index;  ///< grid index of the sampled extremum
  double position;    ///< parabolically refined offset
  double value;       ///< sampled value at the extremum
  std::optional<double> fwhm;
  double prominence;
};

struct FeatureOptions {
  /// Minimum prominence as a fraction of the spectrum's value range.
  double prominence_floor = 1e-4;
};

namespace detail {

// Vertex of the parabola through three (x, y) samples.
inline double parabolic_vertex(double x0, double y0, double x1, double y1, double x2, double y2) {
  const double d01 = (y1 - y0) / (x1 - x0);
  const double d12 = (y2 - y1) / (x2 - x1);
  const double curvature = (d12 - d01) / (x2 - x0);
  if (curvature == 0.0) return x1;
  const double vertex = 0.5 * (x0 + x1) - d01 / (2.0 * curvature);
  return std::clamp(vertex, x0, x2);
}

// Topographic prominence of the extremum at i, for peaks (sign = +1) or dips
// (sign = -1).
inline double prominence(const std::vector<double>& v, std::size_t i, double sign) {
  const double top = sign * v[i];
  double left_base = top;
  for (std::size_t j = i; j-- > 0;) {
    const double s = sign * v[j];
    if (s > top) break;
    left_base = std::min(left_base, s);
  }
  double right_base = top;
  for (std::size_t j = i + 1; j < v.size(); ++j) {
    const double s = sign * v[j];
    if (s > top) break;
    right_base = std::min(right_base, s);
  }
  return top - std::max(left_base, right_base);
}

// Offset where the samples first cross `level` walking from i in direction
// `step`, by linear interpolation. Empty when the walk leaves the grid.
inline std::optional<double> level_crossing(const FrequencyGrid& grid,
                                            const std::vector<double>& v, std::size_t i,
                                            double level, int step) {
  std::ptrdiff_t j = static_cast<std::ptrdiff_t>(i);
  const auto n = static_cast<std::ptrdiff_t>(v.size());
  while (j + step >= 0 && j + step < n) {
    const double a = v[j] - level;
    const double b = v[j + step] - level;
    if (a == 0.0) return grid[j];
    if ((a > 0.0) != (b > 0.0) || b == 0.0) {
      const double t = a / (a - b);
      return grid[j] + t * (grid[j + step] - grid[j]);
    }
    j += step;
  }
  return std::nullopt;
}

}  // namespace detail

/// Interior local maxima and minima above the prominence floor, in grid order.
///
/// Widths are taken at half height above a base: for peaks the base is the
/// larger of the adjacent dip values (zero when there is no adjacent dip), for
/// dips it is the smaller of the adjacent peak values, or the smaller of the
/// two side maxima when there is no adjacent peak.
inline std::vector<SpectralFeature> extract_features(const FrequencyGrid& grid,
                                                     const std::vector<double>& v,
                                                     const FeatureOptions& opt = {}) {
  if (v.size() != grid.size()) throw DimensionMismatch("values do not match grid");
  if (v.size() < 5) throw InvalidParameter("feature extraction needs at least 5 points");
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  const double floor = opt.prominence_floor * (*hi - *lo);

  std::vector<SpectralFeature> out;
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    std::optional<FeatureKind> kind;
    if (v[i] > v[i - 1] && v[i] >= v[i + 1]) kind = FeatureKind::peak;
    if (v[i] < v[i - 1] && v[i] <= v[i + 1]) kind = FeatureKind::dip;
    if (!kind) continue;
    const double sign = *kind == FeatureKind::peak ? 1.0 : -1.0;
    const double prom = detail::prominence(v, i, sign);
    if (!(prom > floor) || prom <= 0.0) continue;
    const double pos = detail::parabolic_vertex(grid[i - 1], v[i - 1], grid[i], v[i],
                                                grid[i + 1], v[i + 1]);
    out.push_back({*kind, i, pos, v[i], std::nullopt, prom});
  }

  for (std::size_t k = 0; k < out.size(); ++k) {
    auto& f = out[k];
    std::vector<double> neighbours;
    for (std::size_t nb : {k - 1, k + 1}) {
      if (nb < out.size() && out[nb].kind != f.kind) neighbours.push_back(out[nb].value);
    }
    double base = 0.0;
    if (f.kind == FeatureKind::peak) {
      base = neighbours.empty() ? 0.0 : *std::max_element(neighbours.begin(), neighbours.end());
    } else if (!neighbours.empty()) {
      base = *std::min_element(neighbours.begin(), neighbours.end());
    } else {
      const double left = *std::max_element(v.begin(), v.begin() + f.index + 1);
      const double right = *std::max_element(v.begin() + f.index, v.end());
      base = std::min(left, right);
    }
    const double level = 0.5 * (f.value + base);
    const auto l = detail::level_crossing(grid, v, f.index, level, -1);
    const auto r = detail::level_crossing(grid, v, f.index, level, +1);
    if (l && r && *r > *l) f.fwhm = *r - *l;
  }
  return out;
}

inline std::vector<SpectralFeature> extract_features(const Spectrum& s,
                                                     const FeatureOptions& opt = {}) {
  return extract_features(s.grid, s.values, opt);
}

struct DITMetrics {
  SpectralFeature dit;
  SpectralFeature left_polariton;
  SpectralFeature right_polariton;
  double splitting;
};

/// Locates the transparency feature between the two polaritons.
///
/// Polaritons are the pair of neighbouring same-kind features with the largest
/// common prominence that enclose at least one feature of the opposite kind;
/// the most prominent of those enclosed features is the DIT feature. Through
/// port IOF spectra come out as dip-peak-dip, IPM cavity spectra as
/// peak-dip-peak.
inline DITMetrics dit_metrics(const Spectrum& s, const FeatureOptions& opt = {}) {
  const auto features = extract_features(s, opt);
  std::optional<DITMetrics> best;
  double best_score = -1.0;
  for (FeatureKind kind : {FeatureKind::peak, FeatureKind::dip}) {
    std::optional<std::size_t> prev;
    for (std::size_t k = 0; k < features.size(); ++k) {
      if (features[k].kind != kind) continue;
      if (prev) {
        const auto& l = features[*prev];
        const auto& r = features[k];
        const SpectralFeature* centre = nullptr;
        for (std::size_t m = *prev + 1; m < k; ++m) {
          if (!centre || features[m].prominence > centre->prominence) centre = &features[m];
        }
        const double score = std::min(l.prominence, r.prominence);
        if (centre && score > best_score) {
          best_score = score;
          best = DITMetrics{*centre, l, r, r.position - l.position};
        }
      }
      prev = k;
    }
  }
  if (!best) {
    throw NoDITStructure("no polariton pair enclosing a transparency feature (" +
                         std::to_string(features.size()) + " features found)");
  }
  return *best;
}

/// g^2 > (kappa - gamma)^2 / 16, strict.
inline bool strong_coupling_check(const SystemParams& p) {
  p.validate();
  const double k = p.kappa_me() - p.gamma;
  return p.g * p.g > k * k / 16.0;
}

struct PolaritonLinewidths {
  double cavity_like;
  double atom_like;
};

/// Detuned polariton linewidths 2 Gamma + 2 (g/delta)^2 gamma and
/// 2 gamma + 2 (g/delta)^2 Gamma.
inline PolaritonLinewidths predicted_linewidths(const SystemParams& p) {
  p.validate();
  if (p.delta == 0.0) throw ZeroDetuning("linewidth estimates need nonzero detuning");
  const double r = (p.g / p.delta) * (p.g / p.delta);
  const double big = p.gamma_total();
  return {2.0 * big + 2.0 * r * p.gamma, 2.0 * p.gamma + 2.0 * r * big};
}

enum class DitValueMode { extremum, fixed_offset };

struct ComparisonOptions {
  DitValueMode value_mode = DitValueMode::extremum;
  double fixed_offset = 0.0;  ///< used with DitValueMode::fixed_offset
  FeatureOptions features;
};

struct MethodMetrics {
  std::optional<FeatureKind> dit_kind;
  std::optional<double> dit_value;
  std::optional<double> dit_fwhm;
  std::optional<double> splitting;
  std::optional<std::string> error;  ///< error name when no DIT structure was found
};

struct ComparisonReport {
  MethodMetrics iof;
  MethodMetrics ipm;
  std::optional<double> dit_peak_ratio;        ///< IPM / IOF DIT value
  std::optional<double> fwhm_discrepancy_pct;  ///< 100 |w_ipm - w_iof| / w_iof
  Port port;
  Normalization normalization;
  std::optional<double> best_pump;
};

namespace detail {

inline double sample_at(const Spectrum& s, double offset) {
  const auto& w = s.grid.offsets();
  if (offset <= w.front()) return s.values.front();
  if (offset >= w.back()) return s.values.back();
  const auto it = std::upper_bound(w.begin(), w.end(), offset);
  const std::size_t j = static_cast<std::size_t>(it - w.begin());
  const double t = (offset - w[j - 1]) / (w[j] - w[j - 1]);
  return s.values[j - 1] + t * (s.values[j] - s.values[j - 1]);
}

inline MethodMetrics method_metrics(const Spectrum& s, const ComparisonOptions& opt) {
  MethodMetrics m;
  try {
    const DITMetrics d = dit_metrics(s, opt.features);
    m.dit_kind = d.dit.kind;
    m.dit_value = opt.value_mode == DitValueMode::extremum ? d.dit.value
                                                           : sample_at(s, opt.fixed_offset);
    m.dit_fwhm = d.dit.fwhm;
    m.splitting = d.splitting;
  } catch (const NoDITStructure& e) {
    m.error = e.name();
  }
  return m;
}

}  // namespace detail

/// Cross-method comparison on a shared grid. The IPM spectrum is brought to
/// the IOF spectrum's normalization when they differ.
inline ComparisonReport compare_methods(const Spectrum& iof, Spectrum ipm,
                                        const ComparisonOptions& opt = {}) {
  if (!(iof.grid == ipm.grid)) throw GridMismatch("IOF and IPM spectra use different grids");
  if (ipm.normalization != iof.normalization) ipm = normalize(std::move(ipm), iof.normalization);

  ComparisonReport r;
  r.port = iof.channel == Channel::drop_port ? Port::drop : Port::through;
  r.normalization = iof.normalization;
  r.iof = detail::method_metrics(iof, opt);
  r.ipm = detail::method_metrics(ipm, opt);
  if (r.iof.dit_value && r.ipm.dit_value && *r.iof.dit_value != 0.0) {
    r.dit_peak_ratio = *r.ipm.dit_value / *r.iof.dit_value;
  }
  if (r.iof.dit_fwhm && r.ipm.dit_fwhm && *r.iof.dit_fwhm > 0.0) {
    r.fwhm_discrepancy_pct = 100.0 * std::abs(*r.ipm.dit_fwhm - *r.iof.dit_fwhm) / *r.iof.dit_fwhm;
  }
  return r;
}

struct PumpCandidate {
  double pump;
  double objective;  ///< +inf when the candidate has no usable DIT feature
  std::optional<std::string> error;
};

struct PumpFit {
  double best;
  std::vector<PumpCandidate> table;
};

/// (relative DIT value error)^2 + (relative DIT FWHM error)^2.
inline double fit_objective(const MethodMetrics& reference, const MethodMetrics& candidate) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (!reference.dit_value || !reference.dit_fwhm || !candidate.dit_value ||
      !candidate.dit_fwhm || *reference.dit_value == 0.0) {
    return inf;
  }
  const double dv = (*candidate.dit_value - *reference.dit_value) / *reference.dit_value;
  const double dw = (*candidate.dit_fwhm - *reference.dit_fwhm) / *reference.dit_fwhm;
  return dv * dv + dw * dw;
}

/// Scores each candidate spectrum against a reference and returns the argmin.
/// `produce(pump)` builds the candidate spectrum; candidates run concurrently
/// and are aggregated in input order.
template <typename Producer>
PumpFit fit_against(const Spectrum& reference, const std::vector<double>& candidates,
                    Producer produce, const ComparisonOptions& opt = {}) {
  if (candidates.empty()) throw InvalidParameter("no pump candidates");
  const MethodMetrics ref = detail::method_metrics(reference, opt);
  if (ref.error) throw NoDITStructure("reference spectrum has no DIT structure");

  std::vector<std::future<PumpCandidate>> jobs;
  jobs.reserve(candidates.size());
  for (double pump : candidates) {
    jobs.push_back(std::async(std::launch::async, [&, pump]() -> PumpCandidate {
      try {
        Spectrum cand = produce(pump);
        if (cand.normalization != reference.normalization) {
          cand = normalize(std::move(cand), reference.normalization);
        }
        const MethodMetrics m = detail::method_metrics(cand, opt);
        return {pump, fit_objective(ref, m), m.error};
      } catch (const Error& e) {
        return {pump, std::numeric_limits<double>::infinity(), e.name()};
      }
    }));
  }
  PumpFit fit{0.0, {}};
  for (auto& j : jobs) fit.table.push_back(j.get());

  std::optional<std::size_t> arg;
  for (std::size_t k = 0; k < fit.table.size(); ++k) {
    if (!std::isfinite(fit.table[k].objective)) continue;
    if (!arg || fit.table[k].objective < fit.table[*arg].objective) arg = k;
  }
  if (!arg) throw NoDITStructure("no pump candidate produced a DIT feature");
  fit.best = fit.table[*arg].pump;
  return fit;
}

/// Sweeps the incoherent pump and picks the value whose IPM transparency
/// feature best matches the IOF one in height and width.
inline PumpFit fit_pump_rate(const SystemParams& params, const FrequencyGrid& grid,
                             const std::vector<double>& candidates, Port port,
                             Normalization normalization, const ComparisonOptions& opt = {}) {
  params.validate();
  if (!strong_coupling_check(params)) {
    throw InvalidParameter("pump fitting needs the strong coupling regime");
  }
  for (double c : candidates) {
    if (!(c > 0.0)) throw InvalidParameter("pump candidates must be > 0");
    if (!(c < params.kappa_me())) {
      throw PumpExceedsDecay("candidate " + std::to_string(c) + " is not below kappa_me");
    }
  }
  const Spectrum reference = normalize(iof_spectrum(params, grid, port), normalization);
  return fit_against(
      reference, candidates,
      [&](double pump) {
        SystemParams p = params;
        p.pump = pump;
        return ipm_transmission(p, grid, normalization);
      },
      opt);
}

}  // namespace cqed
