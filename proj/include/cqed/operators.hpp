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
#include <cstddef>

#include "cqed/numerics.hpp"
#include "cqed/params.hpp"

namespace cqed {

// Composite basis |n, q>: photon number major, qubit minor, q = 0 ground and
// q = 1 excited. Index = 2 n + q.
struct BasisState {
  int photons;
  bool excited;
  friend bool operator==(const BasisState&, const BasisState&) = default;
};

constexpr std::size_t basis_index(BasisState s) {
  return 2 * static_cast<std::size_t>(s.photons) + (s.excited ? 1 : 0);
}

constexpr BasisState basis_state(std::size_t index) {
  return {static_cast<int>(index / 2), index % 2 == 1};
}

struct SingleMode {
  std::size_t dim;
  ComplexMatrix a;
};

/// Bare Fock-space annihilation operator, a|n> = sqrt(n)|n-1>.
inline SingleMode single_mode_operators(int n_max) {
  if (n_max < 1) throw InvalidParameter("n_max must be >= 1");
  const auto dim = static_cast<std::size_t>(n_max) + 1;
  ComplexMatrix a(dim, dim);
  for (std::size_t n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return {dim, std::move(a)};
}

/// Cavity and dot operators on the truncated composite space together with the
/// Jaynes-Cummings Hamiltonian in the frame rotating at the cavity frequency.
struct OperatorSet {
  std::size_t dim;
  ComplexMatrix a;      ///< cavity annihilation ⊗ 1
  ComplexMatrix sigma;  ///< 1 ⊗ dot lowering |g><e|
  ComplexMatrix h;
};

inline OperatorSet build_operators(const SystemParams& params) {
  params.validate();
  const SingleMode mode = single_mode_operators(params.n_max);
  ComplexMatrix lowering(2, 2);
  lowering(0, 1) = 1.0;

  OperatorSet ops{2 * mode.dim, kron(mode.a, ComplexMatrix::identity(2)),
                  kron(ComplexMatrix::identity(mode.dim), lowering), ComplexMatrix{}};

  const Complex coupling = std::polar(params.g, params.coupling_phase);
  const ComplexMatrix sd = ops.sigma.adjoint();
  const ComplexMatrix ad = ops.a.adjoint();
  // H = delta s+s + (-i g s+ a + i g* a+ s)
  ops.h = params.delta * (sd * ops.sigma) + (-kI * coupling) * (sd * ops.a) +
          (kI * std::conj(coupling)) * (ad * ops.sigma);
  return ops;
}

}  // namespace cqed
