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
#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "cqed/errors.hpp"
#include "cqed/params.hpp"

namespace cqed {

enum class Method { IPM, IOF };
enum class Channel { axis, side, combined, through_port, drop_port };
enum class Normalization { raw, unit_max, unit_area };
enum class Port { through, drop };

namespace detail {

template <typename E, std::size_t N>
struct EnumNames {
  std::array<std::pair<E, std::string_view>, N> names;

  std::string_view to_string(E e) const {
    for (const auto& [v, s] : names)
      if (v == e) return s;
    return "?";
  }

  E parse(std::string_view s, const char* what) const {
    for (const auto& [v, n] : names)
      if (n == s) return v;
    throw InvalidParameter(std::string("unknown ") + what + " '" + std::string(s) + "'");
  }
};

inline constexpr EnumNames<Method, 2> kMethodNames{{{{Method::IPM, "IPM"}, {Method::IOF, "IOF"}}}};
inline constexpr EnumNames<Channel, 5> kChannelNames{{{{Channel::axis, "axis"},
                                                       {Channel::side, "side"},
                                                       {Channel::combined, "combined"},
                                                       {Channel::through_port, "through_port"},
                                                       {Channel::drop_port, "drop_port"}}}};
inline constexpr EnumNames<Normalization, 3> kNormalizationNames{
    {{{Normalization::raw, "raw"},
      {Normalization::unit_max, "unit_max"},
      {Normalization::unit_area, "unit_area"}}}};
inline constexpr EnumNames<Port, 2> kPortNames{{{{Port::through, "through"}, {Port::drop, "drop"}}}};

}  // namespace detail

inline std::string_view to_string(Method m) { return detail::kMethodNames.to_string(m); }
inline std::string_view to_string(Channel c) { return detail::kChannelNames.to_string(c); }
inline std::string_view to_string(Normalization n) {
  return detail::kNormalizationNames.to_string(n);
}
inline std::string_view to_string(Port p) { return detail::kPortNames.to_string(p); }

inline Method parse_method(std::string_view s) { return detail::kMethodNames.parse(s, "method"); }
inline Normalization parse_normalization(std::string_view s) {
  return detail::kNormalizationNames.parse(s, "normalization");
}
inline Port parse_port(std::string_view s) { return detail::kPortNames.parse(s, "port"); }

/// Ascending frequency offsets from the cavity resonance, in units of gamma.
class FrequencyGrid {
 public:
  explicit FrequencyGrid(std::vector<double> offsets) : offsets_(std::move(offsets)) {
    if (offsets_.size() < 3) throw InvalidParameter("frequency grid needs at least 3 points");
    for (std::size_t i = 0; i < offsets_.size(); ++i) {
      if (!std::isfinite(offsets_[i])) throw InvalidParameter("frequency grid must be finite");
      if (i > 0 && !(offsets_[i] > offsets_[i - 1])) {
        throw InvalidParameter("frequency grid must be strictly ascending");
      }
    }
    const double step = (offsets_.back() - offsets_.front()) / double(offsets_.size() - 1);
    uniform_ = true;
    for (std::size_t i = 1; i < offsets_.size(); ++i) {
      if (std::abs(offsets_[i] - offsets_[i - 1] - step) > 1e-9 * std::abs(step)) {
        uniform_ = false;
        break;
      }
    }
  }

  static FrequencyGrid uniform(double min, double max, std::size_t points) {
    if (points < 3) throw InvalidParameter("frequency grid needs at least 3 points");
    if (!(max > min)) throw InvalidParameter("grid max must exceed grid min");
    std::vector<double> w(points);
    const double span = max - min;
    for (std::size_t i = 0; i < points; ++i) {
      w[i] = min + span * (static_cast<double>(i) / static_cast<double>(points - 1));
    }
    w.back() = max;
    return FrequencyGrid(std::move(w));
  }

  /// Grid w = center + scale tan(theta) with theta uniform on (-pi/2, pi/2).
  /// Trapezoidal sums on it resolve Lorentzian tails out to ~scale * points.
  static FrequencyGrid tangent(double center, double scale, std::size_t points) {
    if (!(scale > 0.0)) throw InvalidParameter("tangent grid scale must be > 0");
    std::vector<double> w(points);
    for (std::size_t i = 0; i < points; ++i) {
      const double theta =
          -std::numbers::pi / 2 + std::numbers::pi * (static_cast<double>(i) + 0.5) /
                                      static_cast<double>(points);
      w[i] = center + scale * std::tan(theta);
    }
    return FrequencyGrid(std::move(w));
  }

  /// Uniform grid covering both polaritons and their tails:
  /// [-3 Gamma - 3 g + min(delta, 0), 3 Gamma + 3 g + max(delta, 0)].
  static FrequencyGrid default_for(const SystemParams& p, std::size_t points = 2001) {
    const double reach = 3.0 * p.gamma_total() + 3.0 * p.g;
    return uniform(-reach + std::min(p.delta, 0.0), reach + std::max(p.delta, 0.0), points);
  }

  std::size_t size() const noexcept { return offsets_.size(); }
  double operator[](std::size_t i) const { return offsets_[i]; }
  const std::vector<double>& offsets() const noexcept { return offsets_; }
  bool is_uniform() const noexcept { return uniform_; }
  double min() const { return offsets_.front(); }
  double max() const { return offsets_.back(); }

  friend bool operator==(const FrequencyGrid& a, const FrequencyGrid& b) {
    return a.offsets_ == b.offsets_;
  }

 private:
  std::vector<double> offsets_;
  bool uniform_ = false;
};

inline double trapezoid(const FrequencyGrid& grid, const std::vector<double>& values) {
  if (values.size() != grid.size()) throw DimensionMismatch("values do not match grid");
  double s = 0.0;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    s += 0.5 * (values[i] + values[i - 1]) * (grid[i] - grid[i - 1]);
  }
  return s;
}

/// Sampled spectrum with provenance.
struct Spectrum {
  FrequencyGrid grid;
  std::vector<double> values;
  Method method;
  Channel channel;
  Normalization normalization = Normalization::raw;
  SystemParams params;

  double max_value() const { return *std::max_element(values.begin(), values.end()); }
  double area() const { return trapezoid(grid, values); }
};

inline constexpr double kNegativeSpectrumTolerance = 1e-12;

/// Builds a raw spectrum after checking that values are finite and not
/// meaningfully negative; small negative round-off is clamped to zero.
inline Spectrum make_spectrum(FrequencyGrid grid, std::vector<double> values, Method method,
                              Channel channel, const SystemParams& params) {
  if (values.size() != grid.size()) throw DimensionMismatch("values do not match grid");
  double scale = 1.0;
  for (double v : values) {
    if (!std::isfinite(v)) throw NegativeSpectrum("spectrum value is not finite");
    scale = std::max(scale, std::abs(v));
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < -kNegativeSpectrumTolerance * scale) {
      throw NegativeSpectrum("value " + std::to_string(values[i]) + " at offset " +
                             std::to_string(grid[i]));
    }
    values[i] = std::max(values[i], 0.0);
  }
  return {std::move(grid), std::move(values), method, channel, Normalization::raw, params};
}

/// Rescales a spectrum. Rescaling is only defined from raw data or between
/// identical normalizations, since a normalized spectrum has lost its scale.
inline Spectrum normalize(Spectrum s, Normalization target) {
  if (target == s.normalization) return s;
  if (s.normalization != Normalization::raw && target == Normalization::raw) {
    throw InvalidParameter("cannot recover a raw spectrum from a normalized one");
  }
  double denom = 1.0;
  switch (target) {
    case Normalization::raw:
      break;
    case Normalization::unit_max:
      denom = s.max_value();
      break;
    case Normalization::unit_area:
      denom = s.area();
      break;
  }
  if (!(denom > 0.0)) throw InvalidParameter("spectrum has no weight to normalize");
  for (auto& v : s.values) v /= denom;
  if (target == Normalization::unit_max) {
    // Exact unit maximum.
    auto it = std::max_element(s.values.begin(), s.values.end());
    *it = 1.0;
  }
  s.normalization = target;
  return s;
}

}  // namespace cqed
