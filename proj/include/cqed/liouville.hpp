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
#include <string>
#include <vector>

#include "cqed/numerics.hpp"
#include "cqed/operators.hpp"
#include "cqed/params.hpp"

namespace cqed {

/// Density matrix on the composite space. Construction checks Hermiticity and
/// unit trace; positivity is checked separately since it costs a
/// diagonalization.
class DensityMatrix {
 public:
  static constexpr double kHermiticityTolerance = 1e-10;
  static constexpr double kTraceTolerance = 1e-12;
  static constexpr double kEigenvalueTolerance = 1e-10;

  explicit DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {
    if (!m_.square()) throw DimensionMismatch("density matrix must be square");
    if (!m_.is_hermitian(kHermiticityTolerance)) {
      throw InvalidParameter("density matrix is not Hermitian");
    }
    if (std::abs(m_.trace() - 1.0) > kTraceTolerance) {
      throw InvalidParameter("density matrix trace differs from 1");
    }
  }

  /// Pure basis-state projector |k><k|.
  static DensityMatrix projector(std::size_t dim, std::size_t k) {
    ComplexMatrix m(dim, dim);
    m(k, k) = 1.0;
    return DensityMatrix(std::move(m));
  }

  std::size_t dim() const noexcept { return m_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return m_; }

  double min_eigenvalue() const { return hermitian_eigenvalues(m_).front(); }

 private:
  ComplexMatrix m_;
};

struct DissipatorSpec {
  ComplexMatrix collapse;
  double weight;
};

/// Matrix of a generator acting on column-stacked d x d matrices.
struct Liouvillian {
  std::size_t dim;
  ComplexMatrix matrix;

  ComplexMatrix apply(const ComplexMatrix& x) const {
    return unvectorize(matrix * std::span<const Complex>(vectorize(x)), dim);
  }
};

/// C rho C+ - 1/2 C+C rho - 1/2 rho C+C
inline ComplexMatrix dissipator_action(const ComplexMatrix& c, const ComplexMatrix& rho) {
  const ComplexMatrix cd = c.adjoint();
  const ComplexMatrix cdc = cd * c;
  return c * rho * cd - 0.5 * (cdc * rho) - 0.5 * (rho * cdc);
}

inline ComplexMatrix dissipator_action(const ComplexMatrix& c, const DensityMatrix& rho) {
  return dissipator_action(c, rho.matrix());
}

/// rho -> -i[H, rho] + sum_k w_k D[C_k] rho, column-stacked:
/// -i(1⊗H - H^T⊗1) + sum_k w_k (conj(C)⊗C - 1/2 1⊗C+C - 1/2 (C+C)^T⊗1).
inline Liouvillian build_superoperator(const ComplexMatrix& h,
                                       const std::vector<DissipatorSpec>& dissipators) {
  if (!h.square()) throw DimensionMismatch("Hamiltonian must be square");
  const std::size_t d = h.rows();
  const ComplexMatrix id = ComplexMatrix::identity(d);
  ComplexMatrix l = (-kI) * (kron(id, h) - kron(h.transpose(), id));
  for (const auto& [c, w] : dissipators) {
    if (c.rows() != d || c.cols() != d) {
      throw DimensionMismatch("collapse operator dimension does not match the system");
    }
    if (!std::isfinite(w) || w < 0.0) throw InvalidParameter("dissipator weight must be >= 0");
    if (w == 0.0) continue;
    const ComplexMatrix cdc = c.adjoint() * c;
    l += w * (kron(c.conj(), c) - 0.5 * kron(id, cdc) - 0.5 * kron(cdc.transpose(), id));
  }
  return {d, std::move(l)};
}

/// Pumped (or unpumped) master-equation generator with weights 2 kappa_me,
/// 2 gamma and 2 P_a.
inline Liouvillian build_liouvillian(const OperatorSet& ops, const SystemParams& params,
                                     bool include_pump) {
  params.validate();
  if (include_pump) params.require_pump_below_decay();
  std::vector<DissipatorSpec> diss{{ops.a, 2.0 * params.kappa_me()},
                                   {ops.sigma, 2.0 * params.gamma}};
  if (include_pump) diss.push_back({ops.a.adjoint(), 2.0 * params.pump});
  return build_superoperator(ops.h, diss);
}

/// Largest |Tr(L x)| over basis inputs, i.e. the norm of the trace functional
/// applied to the generator.
inline double trace_defect(const Liouvillian& l) {
  const std::size_t d = l.dim;
  double worst = 0.0;
  for (std::size_t col = 0; col < d * d; ++col) {
    Complex s = 0.0;
    for (std::size_t k = 0; k < d; ++k) s += l.matrix(diagonal_slot(k, d), col);
    worst = std::max(worst, std::abs(s));
  }
  return worst;
}

inline constexpr double kPositivityTolerance = 1e-8;

inline DensityMatrix steady_state(const Liouvillian& l, std::size_t slot = 0) {
  CVector v = null_vector_trace_normalized(l.matrix, l.dim, slot);
  ComplexMatrix rho = unvectorize(v, l.dim);
  // Re-impose the unit trace exactly after Hermitization.
  const double tr = rho.trace().real();
  rho *= 1.0 / tr;
  DensityMatrix dm(std::move(rho));
  const double lowest = dm.min_eigenvalue();
  if (lowest < -kPositivityTolerance) {
    throw PositivityViolation("steady state has eigenvalue " + std::to_string(lowest) +
                              "; truncation is likely too small");
  }
  return dm;
}

inline Complex expectation(const ComplexMatrix& rho, const ComplexMatrix& a) {
  if (rho.rows() != a.cols() || rho.cols() != a.rows()) {
    throw DimensionMismatch("operator dimension does not match the state");
  }
  Complex t = 0.0;
  for (std::size_t i = 0; i < rho.rows(); ++i)
    for (std::size_t j = 0; j < rho.cols(); ++j) t += rho(i, j) * a(j, i);
  return t;
}

inline Complex expectation(const DensityMatrix& rho, const ComplexMatrix& a) {
  return expectation(rho.matrix(), a);
}

/// Steady state at a truncation that has been checked for convergence.
struct ConvergedSteadyState {
  SystemParams params;  ///< params with n_max set to the accepted truncation
  OperatorSet ops;
  Liouvillian liouvillian;
  DensityMatrix rho;
  double photon_number;
  double truncation_change;  ///< |<a+a>(n_max+1) - <a+a>(n_max)|
};

inline constexpr double kTruncationTolerance = 1e-6;
/// Relative photon-number tolerance used by the spectrum pipelines, on top of
/// the absolute one. Strong pumps fill many Fock levels and cannot reach 1e-6
/// absolute by n_max = 9, while 1e-4 relative is far below any feature change.
inline constexpr double kSpectrumRelativeTolerance = 1e-4;
inline constexpr int kMaxTruncation = 9;

/// Solves the steady state starting at params.n_max. When the photon number
/// moves by more than `tolerance + relative_tolerance * <a+a>` on adding one
/// Fock level, or the state is not positive, the truncation is raised by two
/// up to kMaxTruncation.
inline ConvergedSteadyState converged_steady_state(SystemParams params, bool include_pump,
                                                   double tolerance = kTruncationTolerance,
                                                   double relative_tolerance = 0.0) {
  params.validate();
  if (include_pump) params.require_pump_below_decay();

  auto photon_number_at = [&](int n_max) {
    SystemParams p = params;
    p.n_max = n_max;
    OperatorSet ops = build_operators(p);
    Liouvillian l = build_liouvillian(ops, p, include_pump);
    DensityMatrix rho = steady_state(l);
    const double n = expectation(rho, ops.a.adjoint() * ops.a).real();
    return ConvergedSteadyState{p, std::move(ops), std::move(l), std::move(rho), n, 0.0};
  };

  std::string last_problem;
  for (int n_max = params.n_max; n_max <= std::max(params.n_max, kMaxTruncation); n_max += 2) {
    try {
      ConvergedSteadyState base = photon_number_at(n_max);
      const ConvergedSteadyState next = photon_number_at(n_max + 1);
      base.truncation_change = std::abs(next.photon_number - base.photon_number);
      if (base.truncation_change < tolerance + relative_tolerance * base.photon_number) {
        return base;
      }
      last_problem = "photon number changed by " + std::to_string(base.truncation_change) +
                     " at n_max " + std::to_string(n_max);
    } catch (const PositivityViolation& e) {
      last_problem = e.what();
    }
  }
  throw TruncationNotConverged(last_problem);
}

}  // namespace cqed
