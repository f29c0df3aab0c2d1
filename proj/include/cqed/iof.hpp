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
#include <complex>
#include <vector>

#include "cqed/numerics.hpp"
#include "cqed/params.hpp"
#include "cqed/spectrum.hpp"

namespace cqed {

/// Rates entering the weak-excitation input-output transfer function.
///
/// Kept separate from SystemParams so that limiting cases (gamma = 0, the
/// lossless dot) can be evaluated directly.
struct TransferCoefficients {
  double gamma_total;
  double kappa1;
  double gamma;
  double g;
  double delta;

  static TransferCoefficients from(const SystemParams& p) {
    p.validate();
    return {p.gamma_total(), p.kappa1, p.gamma, p.g, p.delta};
  }

  /// D(w) = i(0 - w) + Gamma + g^2 / (i(delta - w) + gamma).
  Complex denominator(double omega) const {
    return Complex{gamma_total, -omega} + g * g / Complex{gamma, delta - omega};
  }

  Complex through(double omega) const { return 1.0 - kappa1 / denominator(omega); }
  Complex drop(double omega) const { return kappa1 / denominator(omega); }
};

/// Output-to-input amplitude at one cavity-frame offset. The coupling phase
/// drops out: only |g|^2 enters.
inline Complex transmission_amplitude(const SystemParams& params, double omega_offset,
                                      Port port) {
  const auto c = TransferCoefficients::from(params);
  return port == Port::through ? c.through(omega_offset) : c.drop(omega_offset);
}

inline Spectrum iof_spectrum(const SystemParams& params, const FrequencyGrid& grid, Port port) {
  const auto c = TransferCoefficients::from(params);
  std::vector<double> v(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    v[i] = std::norm(port == Port::through ? c.through(grid[i]) : c.drop(grid[i]));
  }
  return make_spectrum(grid, std::move(v), Method::IOF,
                       port == Port::through ? Channel::through_port : Channel::drop_port,
                       params);
}

}  // namespace cqed
