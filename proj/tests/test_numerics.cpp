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

#include "cqed/liouville.hpp"
#include "cqed/numerics.hpp"
#include "cqed/operators.hpp"
#include "test_support.hpp"

namespace cqed {
namespace {

double residual(const ComplexMatrix& a, const CVector& x, const CVector& b) {
  CVector ax = a * x;
  for (std::size_t i = 0; i < ax.size(); ++i) ax[i] -= b[i];
  return max_abs(ax);
}

TEST(ComplexMatrix, RejectsNonFiniteEntries) {
  std::vector<Complex> e{1.0, std::numeric_limits<double>::quiet_NaN(), 0.0, 1.0};
  EXPECT_THROW(ComplexMatrix(2, 2, e), InvalidParameter);
  EXPECT_THROW(ComplexMatrix(0, 2), DimensionMismatch);
}

TEST(ComplexMatrix, KronAndVectorizeFollowColumnStacking) {
  std::mt19937_64 rng(7);
  const auto a = testing::random_matrix(rng, 3, 3);
  const auto x = testing::random_matrix(rng, 3, 3);
  const auto b = testing::random_matrix(rng, 3, 3);
  // vec(A X B) = (B^T kron A) vec(X)
  const CVector lhs = vectorize(a * x * b);
  const CVector rhs = kron(b.transpose(), a) * vectorize(x);
  for (std::size_t i = 0; i < lhs.size(); ++i) EXPECT_LT(std::abs(lhs[i] - rhs[i]), 1e-12);
  const ComplexMatrix back = unvectorize(vectorize(x), 3);
  EXPECT_EQ((back - x).max_abs(), 0.0);
}

TEST(SolveDense, IdentityReturnsRightHandSide) {
  const CVector b{1.0, kI, -2.0, 0.0};
  const CVector x = solve_dense(ComplexMatrix::identity(4), b);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(x[i], b[i]);
}

TEST(SolveDense, Diagonal) {
  const std::vector<Complex> d{2.0, 4.0};
  const CVector x = solve_dense(ComplexMatrix::diagonal(d), CVector{2.0, 4.0});
  EXPECT_NEAR(std::abs(x[0] - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(x[1] - 1.0), 0.0, 1e-15);
}

TEST(SolveDense, ResidualBoundOnSeededRandomSystems) {
  std::mt19937_64 rng(20260101);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 2 + trial % 23;
    ComplexMatrix a = testing::random_matrix(rng, n, n);
    for (std::size_t i = 0; i < n; ++i) a(i, i) += static_cast<double>(n);
    const CVector b = testing::random_vector(rng, n);
    const CVector x = solve_dense(a, b);
    EXPECT_LE(residual(a, x, b), 1e-10 * std::max(1.0, max_abs(b))) << "trial " << trial;
  }
}

TEST(SolveDense, DeterministicForIdenticalInputs) {
  std::mt19937_64 rng(3);
  const ComplexMatrix a = testing::random_matrix(rng, 8, 8);
  const CVector b = testing::random_vector(rng, 8);
  const CVector x1 = solve_dense(a, b);
  const CVector x2 = solve_dense(a, b);
  EXPECT_EQ(x1, x2);
}

TEST(SolveDense, SingularAndShapeErrors) {
  ComplexMatrix a(3, 3);
  a(0, 0) = 1.0;
  a(1, 1) = 1.0;
  EXPECT_THROW(solve_dense(a, CVector(3, 1.0)), SingularMatrix);
  EXPECT_THROW(solve_dense(ComplexMatrix::identity(3), CVector(2, 1.0)), DimensionMismatch);
  EXPECT_THROW(solve_dense(ComplexMatrix(2, 3), CVector(2, 1.0)), DimensionMismatch);
}

Liouvillian single_mode_liouvillian(int n_max, double kappa, double pump) {
  const SingleMode m = single_mode_operators(n_max);
  std::vector<DissipatorSpec> diss{{m.a, 2.0 * kappa}};
  if (pump > 0.0) diss.push_back({m.a.adjoint(), 2.0 * pump});
  return build_superoperator(ComplexMatrix(m.dim, m.dim), diss);
}

TEST(NullVector, PureDecayEmptiesTheMode) {
  const Liouvillian l = single_mode_liouvillian(3, 1.0, 0.0);
  const ComplexMatrix rho = unvectorize(null_vector_trace_normalized(l.matrix, l.dim), l.dim);
  EXPECT_LT((rho - DensityMatrix::projector(4, 0).matrix()).max_abs(), 1e-12);
}

TEST(NullVector, PumpedModeMatchesDecoupledPopulation) {
  // Thermal-like geometric ladder; the truncation error at n_max = 20 is ~ (1/5)^21.
  const Liouvillian l = single_mode_liouvillian(20, 1.0, 0.2);
  const ComplexMatrix rho = unvectorize(null_vector_trace_normalized(l.matrix, l.dim), l.dim);
  const SingleMode m = single_mode_operators(20);
  EXPECT_NEAR(expectation(rho, m.a.adjoint() * m.a).real(), 0.25, 1e-12);
}

TEST(NullVector, TraceHermiticityAndRowChoice) {
  SystemParams p;
  p.kappa1 = 1.3;
  p.g = 0.7;
  p.delta = 0.4;
  p.pump = 0.3;
  p.n_max = 3;
  const OperatorSet ops = build_operators(p);
  const Liouvillian l = build_liouvillian(ops, p, true);
  const CVector v0 = null_vector_trace_normalized(l.matrix, l.dim, 0);
  const CVector v5 = null_vector_trace_normalized(l.matrix, l.dim, 5);
  const ComplexMatrix r0 = unvectorize(v0, l.dim);
  const ComplexMatrix r5 = unvectorize(v5, l.dim);
  EXPECT_NEAR(std::abs(r0.trace() - 1.0), 0.0, 1e-14);
  EXPECT_LE((r0 - r0.adjoint()).max_abs(), 1e-10);
  EXPECT_LE((r0 - r5).max_abs(), 1e-9);
  EXPECT_LE(max_abs(l.matrix * v0), 1e-9);
  for (double e : hermitian_eigenvalues(r0)) EXPECT_GE(e, -1e-10);
}

TEST(NullVector, DegenerateGeneratorIsReported) {
  // Zero generator: every state is stationary.
  EXPECT_THROW(null_vector_trace_normalized(ComplexMatrix(4, 4), 2), DegenerateSteadyState);
}

}  // namespace
}  // namespace cqed
