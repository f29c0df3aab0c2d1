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
#include <optional>
#include <string>

#include "cqed/errors.hpp"

namespace cqed {

/// Physical rates and frequencies of the coupled cavity / quantum-dot system.
///
/// All values are in units of the dot emission rate (gamma = 1 by convention).
/// Frequencies are offsets from the cavity resonance.
struct SystemParams {
  double gamma = 1.0;   ///< dot amplitude decay rate
  double kappa0 = 0.0;  ///< intrinsic cavity decay
  double kappa1 = 1.0;  ///< external (waveguide) cavity decay
  double g = 0.0;       ///< coupling strength
  double delta = 0.0;   ///< dot minus cavity frequency
  double pump = 0.0;    ///< incoherent cavity pump rate, IPM only
  int n_max = 5;        ///< Fock truncation, photon numbers 0..n_max

  /// Phase of the coupling constant. Observables do not depend on it.
  double coupling_phase = 0.0;

  /// When set, replaces the master-equation cavity decay that is otherwise
  /// identified with the total cavity field decay rate.
  std::optional<double> kappa_me_override;

  /// Total cavity field decay rate, kappa0/2 + kappa1.
  double gamma_total() const { return kappa0 / 2.0 + kappa1; }

  /// Cavity decay entering the master equation.
  double kappa_me() const { return kappa_me_override.value_or(gamma_total()); }

  /// Sets kappa1 so that gamma_total() equals `total`, keeping kappa0.
  void set_gamma_total(double total) { kappa1 = total - kappa0 / 2.0; }

  void validate() const {
    auto finite_nonneg = [](double v, const char* name) {
      if (!std::isfinite(v) || v < 0.0) {
        throw InvalidParameter(std::string(name) + " must be finite and >= 0, got " +
                               std::to_string(v));
      }
    };
    if (!std::isfinite(gamma) || gamma <= 0.0) {
      throw InvalidParameter("gamma must be finite and > 0, got " + std::to_string(gamma));
    }
    finite_nonneg(kappa0, "kappa0");
    finite_nonneg(kappa1, "kappa1");
    finite_nonneg(g, "g");
    finite_nonneg(pump, "pump");
    if (!std::isfinite(delta)) throw InvalidParameter("delta must be finite");
    if (!std::isfinite(coupling_phase)) throw InvalidParameter("coupling_phase must be finite");
    if (kappa_me_override) finite_nonneg(*kappa_me_override, "kappa_me");
    if (n_max < 1) throw InvalidParameter("n_max must be >= 1, got " + std::to_string(n_max));
  }

  /// Extra check for every path that needs an incoherently pumped steady state.
  void require_pump_below_decay() const {
    if (!(pump < kappa_me())) {
      throw PumpExceedsDecay("pump " + std::to_string(pump) + " must be below kappa_me " +
                             std::to_string(kappa_me()));
    }
  }
};

}  // namespace cqed
