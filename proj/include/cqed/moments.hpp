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

#include "cqed/numerics.hpp"
#include "cqed/params.hpp"

namespace cqed {

/// Steady-state second moments of the pumped system in the weak-excitation
/// closure.
struct MomentSet {
  double n_a;         ///< <a+a>
  double n_sigma;     ///< <s+s>
  Complex coherence;  ///< <a+ s>
  double chi;         ///< xi + gamma
  double xi;          ///< kappa - P_a
  bool beyond_weak_excitation;  ///< pump > kappa/2, closure accuracy degrades
};

/// Closed-form resonant cavity population
/// n_a = P (g^2 + chi gamma) / (chi (xi gamma + g^2)), xi = kappa - P, chi = xi + gamma.
inline double cavity_population_closed_form(const SystemParams& p) {
  p.validate();
  if (p.delta != 0.0) throw InvalidParameter("closed form holds on resonance only");
  const double xi = p.kappa_me() - p.pump;
  if (!(xi > 0.0)) throw PumpExceedsDecay("xi = kappa - P_a must be > 0");
  const double chi = xi + p.gamma;
  const double g2 = p.g * p.g;
  return p.pump * (g2 + chi * p.gamma) / (chi * (xi * p.gamma + g2));
}

/// Linear steady-state system for (n_a, n_sigma, Re c, Im c), c = <a+ s>:
///
///   0 = -2 xi n_a + 2 P + 2 g Re c
///   0 = -2 gamma n_sigma - 2 g Re c
///   0 = -chi c - i delta c + g (n_sigma - n_a)
///
/// The last line drops the <a+a s+s> term (s_z ~ -1).
inline MomentSet moment_steady_state(const SystemParams& p) {
  p.validate();
  const double kappa = p.kappa_me();
  const double xi = kappa - p.pump;
  if (!(xi > 0.0)) throw PumpExceedsDecay("xi = kappa - P_a must be > 0");
  const double chi = xi + p.gamma;
  const double g = p.g;

  ComplexMatrix a(4, 4);
  const double rows[4][4] = {{-2 * xi, 0, 2 * g, 0},
                             {0, -2 * p.gamma, -2 * g, 0},
                             {-g, g, -chi, p.delta},
                             {0, 0, -p.delta, -chi}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a(i, j) = rows[i][j];
  const CVector b{-2 * p.pump, 0.0, 0.0, 0.0};

  CVector x;
  try {
    x = solve_dense(a, b);
  } catch (const SingularMatrix& e) {
    throw SingularMomentSystem(e.what());
  }
  return {x[0].real(), x[1].real(), {x[2].real(), x[3].real()}, chi, xi, p.pump > kappa / 2};
}

}  // namespace cqed
