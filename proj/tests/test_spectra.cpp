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

#include <gtest/gtest.h>

#include "cqed/features.hpp"
#include "cqed/spectra.hpp"

namespace cqed {
namespace {

SystemParams pumped(double kappa, double gamma, double g, double pump, double delta = 0.0) {
  SystemParams p;
  p.kappa1 = kappa;
  p.gamma = gamma;
  p.g = g;
  p.pump = pump;
  p.delta = delta;
  return p;
}

TEST(FrequencyGrid, Validation) {
  EXPECT_THROW(FrequencyGrid({0.0, 1.0}), InvalidParameter);
  EXPECT_THROW(FrequencyGrid({0.0, 1.0, 1.0}), InvalidParameter);
  EXPECT_THROW(FrequencyGrid::uniform(1.0, 1.0, 5), InvalidParameter);
  const FrequencyGrid u = FrequencyGrid::uniform(-2.0, 2.0, 5);
  EXPECT_TRUE(u.is_uniform());
  EXPECT_EQ(u[4], 2.0);
  EXPECT_FALSE(FrequencyGrid::tangent(0.0, 1.0, 11).is_uniform());
}

TEST(FrequencyGrid, DefaultCoversPolaritonsAndDetuning) {
  SystemParams p = pumped(15.0, 1.0, 7.5, 2.5, 22.5);
  const FrequencyGrid g = FrequencyGrid::default_for(p);
  EXPECT_EQ(g.size(), 2001u);
  EXPECT_DOUBLE_EQ(g.min(), -67.5);
  EXPECT_DOUBLE_EQ(g.max(), 90.0);
}

TEST(Spectrum, NormalizationTargets) {
  const FrequencyGrid grid = FrequencyGrid::uniform(-1.0, 1.0, 5);
  const Spectrum s =
      make_spectrum(grid, {0.1, 0.3, 0.7, 0.3, 0.1}, Method::IOF, Channel::drop_port, {});
  EXPECT_EQ(normalize(s, Normalization::unit_max).max_value(), 1.0);
  EXPECT_NEAR(normalize(s, Normalization::unit_area).area(), 1.0, 1e-12);
  EXPECT_THROW(normalize(normalize(s, Normalization::unit_max), Normalization::raw),
               InvalidParameter);
  EXPECT_THROW(make_spectrum(grid, {0.1, -0.3, 0.7, 0.3, 0.1}, Method::IOF, Channel::drop_port, {}),
               NegativeSpectrum);
  const Spectrum tiny =
      make_spectrum(grid, {0.1, -1e-14, 0.7, 0.3, 0.1}, Method::IOF, Channel::drop_port, {});
  EXPECT_EQ(tiny.values[1], 0.0);
}

TEST(Spectrum, EnumNamesRoundTrip) {
  for (Port p : {Port::through, Port::drop}) EXPECT_EQ(parse_port(to_string(p)), p);
  for (Normalization n : {Normalization::raw, Normalization::unit_max, Normalization::unit_area}) {
    EXPECT_EQ(parse_normalization(to_string(n)), n);
  }
  EXPECT_EQ(parse_method("IPM"), Method::IPM);
  EXPECT_THROW(parse_port("sideways"), InvalidParameter);
}

TEST(RegressionSpectrum, MatchesEigenOracleOffResonance) {
  // Reference from an eigendecomposition of L at n_max = 4.
  SystemParams p = pumped(2.0, 1.0, 3.0, 0.3, 1.0);
  p.n_max = 4;
  const OperatorSet ops = build_operators(p);
  const Liouvillian l = build_liouvillian(ops, p, true);
  const DensityMatrix rho = steady_state(l);
  const FrequencyGrid grid({-4.0, -2.5, 0.0, 1.5, 3.0});
  const auto axis = regression_spectrum(l, rho, ops.a.adjoint(), ops.a, grid);
  const auto side = regression_spectrum(l, rho, ops.sigma.adjoint(), ops.sigma, grid);
  const double axis_ref[] = {0.009058856174588277, 0.01585802065811543, 0.0049394364073389934,
                             0.004373312869197496, 0.00865626380867026};
  const double side_ref[] = {0.003275277236121538, 0.008250350538547587, 0.00621712961254395,
                             0.006973185542578385, 0.009834575934861464};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    EXPECT_NEAR(axis[i], axis_ref[i], 1e-12 * 0.02) << "axis " << grid[i];
    EXPECT_NEAR(side[i], side_ref[i], 1e-12 * 0.02) << "side " << grid[i];
  }
}

TEST(RegressionSpectrum, DecoupledModeLorentzian) {
  const SystemParams p = pumped(1.0, 1.0, 0.0, 0.2);
  const Spectrum s = ipm_transmission(p, FrequencyGrid::default_for(p), Normalization::raw);
  const auto f = extract_features(s);
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0].kind, FeatureKind::peak);
  EXPECT_NEAR(f[0].position, 0.0, 1e-9);
  ASSERT_TRUE(f[0].fwhm);
  EXPECT_NEAR(*f[0].fwhm, 1.6, 0.02 * 1.6);
  // Analytic value at the center, n / (pi (kappa - P)), up to truncation.
  EXPECT_NEAR(s.values[1000], 0.25 / (std::numbers::pi * 0.8), 1e-3 * 0.1);
}

TEST(RegressionSpectrum, StrongCouplingDoubletAtDriftEigenfrequencies) {
  const SystemParams p = pumped(1.0, 0.5, 10.0, 0.05);
  const FrequencyGrid grid = FrequencyGrid::default_for(p);
  const Spectrum s = ipm_transmission(p, grid, Normalization::raw);
  std::vector<double> peaks;
  for (const auto& f : extract_features(s))
    if (f.kind == FeatureKind::peak) peaks.push_back(f.position);
  ASSERT_EQ(peaks.size(), 2u);
  const double k = (p.kappa_me() - p.gamma) / 2.0;
  const double expected = std::sqrt(p.g * p.g - k * k);
  const double step = grid[1] - grid[0];
  EXPECT_NEAR(peaks[0], -expected, step);
  EXPECT_NEAR(peaks[1], expected, step);
}

TEST(RegressionSpectrum, NonNegativeAndSymmetricOnResonance) {
  const SystemParams p = pumped(15.0, 1.0, 7.5, 2.5);
  const FrequencyGrid grid = FrequencyGrid::uniform(-60.0, 60.0, 241);
  const Spectrum s = ipm_transmission(p, grid, Normalization::raw);
  const double top = s.max_value();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    EXPECT_GE(s.values[i], 0.0);
    EXPECT_LE(std::abs(s.values[i] - s.values[grid.size() - 1 - i]), 1e-8 * top);
  }
}

TEST(RegressionSpectrum, PointwiseUnderGridRefinement) {
  const SystemParams p = pumped(3.0, 1.0, 1.5, 0.4, 0.7);
  const FrequencyGrid coarse = FrequencyGrid::uniform(-10.0, 10.0, 21);
  const FrequencyGrid fine = FrequencyGrid::uniform(-10.0, 10.0, 41);
  const Spectrum a = ipm_transmission(p, coarse, Normalization::raw);
  const Spectrum b = ipm_transmission(p, fine, Normalization::raw);
  for (std::size_t i = 0; i < coarse.size(); ++i) {
    ASSERT_EQ(coarse[i], fine[2 * i]);
    EXPECT_EQ(a.values[i], b.values[2 * i]);
  }
}

TEST(RegressionSpectrum, SumRuleEqualsPopulation) {
  // Two-sided weight: int S dw = <a+a>.
  for (double g : {0.0, 2.0}) {
    const SystemParams p = pumped(2.0, 1.0, g, 0.3);
    const ConvergedSteadyState ss = converged_steady_state(p, true);
    const FrequencyGrid grid = FrequencyGrid::tangent(0.0, 2.0, 4001);
    const auto s = regression_spectrum(ss.liouvillian, ss.rho, ss.ops.a.adjoint(), ss.ops.a, grid);
    EXPECT_NEAR(trapezoid(grid, s) / ss.photon_number, 1.0, 5e-3) << "g " << g;
  }
}

TEST(RegressionSpectrum, ZeroFrequencyIsRegular) {
  const SystemParams p = pumped(1.0, 1.0, 0.5, 0.2);
  const ConvergedSteadyState ss = converged_steady_state(p, true);
  const FrequencyGrid grid({-1e-9, 0.0, 1e-9});
  const auto s = regression_spectrum(ss.liouvillian, ss.rho, ss.ops.a.adjoint(), ss.ops.a, grid);
  EXPECT_TRUE(std::isfinite(s[1]));
  EXPECT_NEAR(s[1], s[0], 1e-9 * s[1]);
  // Population operator has a nonzero mean; the stationary part is removed.
  const ComplexMatrix n = ss.ops.a.adjoint() * ss.ops.a;
  const auto s2 = regression_spectrum(ss.liouvillian, ss.rho, n, n, grid);
  EXPECT_TRUE(std::isfinite(s2[1]));
}

TEST(ChannelSpectra, DecoupledDotStaysDark) {
  SystemParams p = pumped(1.0, 1.0, 0.0, 0.0);
  const FrequencyGrid grid = FrequencyGrid::tangent(0.0, 1.0, 4001);
  const ChannelSpectra c =
      channel_spectra(p, grid, ChannelMode::initial_excitation, InitialExcitation::photon);
  EXPECT_EQ(*std::max_element(c.t_side.values.begin(), c.t_side.values.end()), 0.0);
  EXPECT_NEAR(c.t_axis.area(), 1.0, 0.01);
}

TEST(ChannelSpectra, InitialExcitationNormalization) {
  for (double gamma_total : {10.0, 35.0}) {
    SystemParams p = pumped(gamma_total, 1.0, gamma_total / 2.0, 0.0);
    const FrequencyGrid grid = FrequencyGrid::tangent(0.0, gamma_total, 4001);
    const ChannelSpectra c = channel_spectra(p, grid, ChannelMode::initial_excitation);
    EXPECT_NEAR(c.t_axis.area() + c.t_side.area(), 1.0, 0.01) << gamma_total;
    EXPECT_EQ(c.t_axis.channel, Channel::axis);
    EXPECT_EQ(c.t_side.channel, Channel::side);
  }
}

TEST(ChannelSpectra, SideFractionFallsWithCavityDecayAtFixedCoupling) {
  auto ratio = [](double gamma_total) {
    SystemParams p = pumped(gamma_total, 1.0, 20.0, 0.0);
    const FrequencyGrid grid = FrequencyGrid::tangent(0.0, gamma_total, 4001);
    const ChannelSpectra c = channel_spectra(p, grid, ChannelMode::initial_excitation);
    return c.t_side.area() / c.t_axis.area();
  };
  EXPECT_GT(ratio(10.0), ratio(35.0));
}

TEST(ChannelSpectra, PumpedFluxes) {
  const SystemParams p = pumped(2.0, 1.0, 1.0, 0.3);
  const FrequencyGrid grid = FrequencyGrid::tangent(0.0, 2.0, 4001);
  const ChannelSpectra c = channel_spectra(p, grid, ChannelMode::pumped_steady);
  const ConvergedSteadyState ss = converged_steady_state(p, true);
  const double ns = expectation(ss.rho, ss.ops.sigma.adjoint() * ss.ops.sigma).real();
  EXPECT_NEAR(c.t_axis.area(), 2.0 * p.kappa_me() * ss.photon_number,
              5e-3 * c.t_axis.area());
  EXPECT_NEAR(c.t_side.area(), 2.0 * p.gamma * ns, 5e-3 * c.t_side.area());
}

TEST(ChannelSpectra, ModePreconditions) {
  const FrequencyGrid grid = FrequencyGrid::uniform(-5.0, 5.0, 11);
  EXPECT_THROW(channel_spectra(pumped(1.0, 1.0, 0.5, 0.0), grid, ChannelMode::pumped_steady),
               InvalidParameter);
  EXPECT_THROW(channel_spectra(pumped(1.0, 1.0, 0.5, 0.2), grid, ChannelMode::initial_excitation),
               InvalidParameter);
  EXPECT_THROW(channel_spectra(pumped(1.0, 1.0, 0.5, 1.5), grid, ChannelMode::pumped_steady),
               PumpExceedsDecay);
}

TEST(IpmTransmission, ResonantDoublet) {
  SystemParams p = pumped(15.0, 1.0, 7.5, 2.5);
  const Spectrum s = ipm_transmission(p, FrequencyGrid::default_for(p), Normalization::unit_max);
  EXPECT_EQ(s.max_value(), 1.0);
  EXPECT_EQ(s.method, Method::IPM);
  EXPECT_EQ(s.channel, Channel::axis);
  const auto f = extract_features(s);
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f[0].kind, FeatureKind::peak);
  EXPECT_EQ(f[1].kind, FeatureKind::dip);
  EXPECT_EQ(f[2].kind, FeatureKind::peak);
  EXPECT_NEAR(f[1].position, 0.0, 1e-9);
}

TEST(IpmTransmission, DetunedPeaksHaveUnequalWidths) {
  SystemParams p = pumped(15.0, 1.0, 7.5, 2.5, 22.5);
  const Spectrum s = ipm_transmission(p, FrequencyGrid::default_for(p), Normalization::unit_max);
  std::vector<SpectralFeature> peaks;
  for (const auto& f : extract_features(s))
    if (f.kind == FeatureKind::peak) peaks.push_back(f);
  ASSERT_EQ(peaks.size(), 2u);
  ASSERT_TRUE(peaks[0].fwhm && peaks[1].fwhm);
  // Narrow (dot-like) feature near offset delta.
  const auto& narrow = *peaks[1].fwhm < *peaks[0].fwhm ? peaks[1] : peaks[0];
  const auto& broad = *peaks[1].fwhm < *peaks[0].fwhm ? peaks[0] : peaks[1];
  // Dot side of the spectrum; eigendecomposition reference for the maximum is 26.45.
  EXPECT_GT(narrow.position, p.delta / 2.0);
  EXPECT_NEAR(narrow.position, 26.45, 0.1);
  const PolaritonLinewidths w = predicted_linewidths(p);
  EXPECT_LT(*narrow.fwhm, 0.5 * *broad.fwhm);
  EXPECT_LT(w.atom_like, w.cavity_like);
}

TEST(IpmTransmission, NeedsPositivePump) {
  const SystemParams p = pumped(1.0, 1.0, 0.5, 0.0);
  EXPECT_THROW(ipm_transmission(p, FrequencyGrid::default_for(p), Normalization::raw),
               InvalidParameter);
}

}  // namespace
}  // namespace cqed
