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

#include <cmath>
#include <deque>
#include <numbers>
#include <utility>
#include <vector>

#include "cqed/liouville.hpp"
#include "cqed/numerics.hpp"
#include "cqed/operators.hpp"
#include "cqed/spectrum.hpp"

namespace cqed {

namespace detail {

/// Indices reachable from `seed` under the sparsity pattern of `l`, sorted.
/// The span of these basis vectors is invariant under l.
inline std::vector<std::size_t> invariant_support(const ComplexMatrix& l,
                                                  const std::vector<std::size_t>& seed) {
  const std::size_t n = l.rows();
  std::vector<char> seen(n, 0);
  std::deque<std::size_t> queue;
  for (auto s : seed) {
    if (!seen[s]) {
      seen[s] = 1;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    const std::size_t j = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      if (!seen[i] && l(i, j) != Complex{}) {
        seen[i] = 1;
        queue.push_back(i);
      }
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (seen[i]) out.push_back(i);
  return out;
}

/// Evaluates Re Tr[left x(w)] / pi with (i w - L) vec(x) = vec(right seed) for
/// every grid offset.
///
/// The component of right*seed along `stationary` (the unique zero mode of L)
/// is removed first; it only contributes Tr(left stationary) Tr(right seed),
/// which vanishes whenever either mean is zero. What remains is traceless and
/// so is every x(w), which lets the row of one diagonal slot be replaced by
/// the trace functional and keeps the system regular at w = 0. The solve is
/// restricted to the smallest coordinate block invariant under L that holds
/// the source.
inline std::vector<double> resolvent_spectrum(const Liouvillian& l, const ComplexMatrix& seed,
                                              const ComplexMatrix& stationary,
                                              const ComplexMatrix& left,
                                              const ComplexMatrix& right,
                                              const FrequencyGrid& grid) {
  const std::size_t d = l.dim;
  if (seed.rows() != d || left.rows() != d || right.rows() != d || stationary.rows() != d) {
    throw DimensionMismatch("operators do not match the Liouvillian dimension");
  }
  ComplexMatrix source = right * seed;
  const Complex offset = source.trace();
  if (offset != Complex{}) source -= offset * stationary;

  CVector src = vectorize(source);
  const double cutoff = 1e-15 * std::max(max_abs(src), 1e-300);
  std::vector<std::size_t> nz;
  for (std::size_t k = 0; k < src.size(); ++k) {
    if (std::abs(src[k]) > cutoff) nz.push_back(k);
  }
  std::vector<double> out(grid.size(), 0.0);
  if (nz.empty()) return out;

  const std::vector<std::size_t> block = invariant_support(l.matrix, nz);
  const std::size_t nb = block.size();

  // Tr[left x] = sum_{ij} left(j, i) x(i, j); vec index of x(i, j) is i + j d.
  CVector weight(nb);
  CVector b(nb);
  std::vector<char> is_diag(nb, 0);
  std::size_t trace_row = nb;
  for (std::size_t r = 0; r < nb; ++r) {
    const std::size_t k = block[r];
    const std::size_t i = k % d;
    const std::size_t j = k / d;
    weight[r] = left(j, i);
    b[r] = src[k];
    if (i == j) {
      is_diag[r] = 1;
      if (trace_row == nb) trace_row = r;
    }
  }
  if (trace_row != nb) b[trace_row] = 0.0;

  ComplexMatrix minus_l(nb, nb);
  for (std::size_t r = 0; r < nb; ++r)
    for (std::size_t c = 0; c < nb; ++c) minus_l(r, c) = -l.matrix(block[r], block[c]);

  for (std::size_t p = 0; p < grid.size(); ++p) {
    ComplexMatrix m = minus_l;
    for (std::size_t r = 0; r < nb; ++r) m(r, r) += kI * grid[p];
    if (trace_row != nb) {
      auto row = m.row(trace_row);
      for (std::size_t c = 0; c < nb; ++c) row[c] = is_diag[c] ? 1.0 : 0.0;
    }
    CVector x;
    try {
      x = LuFactorization(std::move(m)).solve(b);
    } catch (const SingularMatrix& e) {
      throw ResolventSingular("at offset " + std::to_string(grid[p]) + ": " + e.what());
    }
    Complex s = 0.0;
    for (std::size_t r = 0; r < nb; ++r) s += weight[r] * x[r];
    out[p] = s.real() / std::numbers::pi;
  }
  return out;
}

}  // namespace detail

/// Stationary two-time spectrum S(w) = (1/pi) Re Tr[left x(w)] with
/// (i w - L) vec(x) = vec(right rho_ss), the regression evaluation of
/// Re int_0^inf e^{-i w tau} <left(tau) right(0)> dtau. With this sign a
/// feature of left = a+, right = a at cavity-frame offset w sits at +w.
inline std::vector<double> regression_spectrum(const Liouvillian& l, const DensityMatrix& rho_ss,
                                               const ComplexMatrix& left,
                                               const ComplexMatrix& right,
                                               const FrequencyGrid& grid) {
  return detail::resolvent_spectrum(l, rho_ss.matrix(), rho_ss.matrix(), left, right, grid);
}

enum class ChannelMode { pumped_steady, initial_excitation };

/// Initial state for ChannelMode::initial_excitation.
enum class InitialExcitation { dot, photon };

struct ChannelSpectra {
  Spectrum t_axis;
  Spectrum t_side;
};

/// Axis (cavity leakage) and side (direct dot emission) spectra.
///
/// Both channels use the two-sided transform 2 Re int_0^inf, with prefactors
/// kappa/pi for the axis channel and gamma_sp/(2 pi) for the side channel,
/// where gamma_sp = 2 gamma is the dot population decay rate of the
/// 2 gamma D[sigma] dissipator. Integrated over frequency the channels give the
/// photon flux 2 kappa <a+a> and 2 gamma <s+s>. In initial_excitation mode the
/// steady state is replaced by the time integral of rho(t) - rho_ss starting
/// from one excitation, so the two integrals add up to one.
inline ChannelSpectra channel_spectra(const SystemParams& params, const FrequencyGrid& grid,
                                      ChannelMode mode,
                                      InitialExcitation initial = InitialExcitation::dot) {
  params.validate();
  const double kappa = params.kappa_me();
  auto assemble = [&](const Liouvillian& l, const OperatorSet& ops, const ComplexMatrix& seed,
                      const ComplexMatrix& stationary, const SystemParams& snapshot) {
    std::vector<double> axis = detail::resolvent_spectrum(l, seed, stationary, ops.a.adjoint(),
                                                          ops.a, grid);
    std::vector<double> side = detail::resolvent_spectrum(
        l, seed, stationary, ops.sigma.adjoint(), ops.sigma, grid);
    for (auto& v : axis) v *= 2.0 * kappa;
    for (auto& v : side) v *= 2.0 * params.gamma;
    return ChannelSpectra{
        make_spectrum(grid, std::move(axis), Method::IPM, Channel::axis, snapshot),
        make_spectrum(grid, std::move(side), Method::IPM, Channel::side, snapshot)};
  };

  if (mode == ChannelMode::pumped_steady) {
    if (!(params.pump > 0.0)) throw InvalidParameter("pumped_steady mode needs pump > 0");
    const ConvergedSteadyState ss = converged_steady_state(params, true, kTruncationTolerance,
                                                             kSpectrumRelativeTolerance);
    return assemble(ss.liouvillian, ss.ops, ss.rho.matrix(), ss.rho.matrix(), ss.params);
  }

  if (params.pump != 0.0) throw InvalidParameter("initial_excitation mode needs pump = 0");
  const OperatorSet ops = build_operators(params);
  const Liouvillian l = build_liouvillian(ops, params, false);
  const DensityMatrix ground = steady_state(l);
  const std::size_t start = initial == InitialExcitation::dot
                                ? basis_index({0, true})
                                : basis_index({1, false});
  const ComplexMatrix rho0 = DensityMatrix::projector(ops.dim, start).matrix();
  // int_0^inf (rho(t) - rho_ss) dt solves L R = rho_ss - rho0 with Tr R = 0.
  const CVector r = solve_trace_constrained(
      l.matrix, ops.dim, vectorize(ground.matrix() - rho0), 0.0);
  return assemble(l, ops, unvectorize(r, ops.dim), ground.matrix(), params);
}

/// Incoherent-pump transmission: steady state of the pumped master equation at
/// a converged truncation, cavity emission spectrum of (a+, a), normalized.
inline Spectrum ipm_transmission(const SystemParams& params, const FrequencyGrid& grid,
                                 Normalization normalization) {
  params.validate();
  if (!(params.pump > 0.0)) throw InvalidParameter("IPM transmission needs pump > 0");
  const ConvergedSteadyState ss = converged_steady_state(params, true, kTruncationTolerance,
                                                             kSpectrumRelativeTolerance);
  std::vector<double> s =
      regression_spectrum(ss.liouvillian, ss.rho, ss.ops.a.adjoint(), ss.ops.a, grid);
  return normalize(make_spectrum(grid, std::move(s), Method::IPM, Channel::axis, ss.params),
                   normalization);
}

}  // namespace cqed
