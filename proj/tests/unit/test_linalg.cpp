#include <array>
#include <cmath>

#include <gtest/gtest.h>

#include "covmat/error.hpp"
#include "covmat/linalg.hpp"
#include "covmat/states.hpp"
#include "support.hpp"

namespace covmat {
namespace {

using testing::max_diff;
using testing::to_oracle;

DensityMatrix mixed_qubit(double p0) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = p0;
  m(1, 1) = 1.0 - p0;
  m(0, 1) = Complex(0.1, 0.2);
  m(1, 0) = Complex(0.1, -0.2);
  return DensityMatrix({2}, m);
}

DensityMatrix mixed_qutrit() {
  Rng rng(11);
  return random_mixed({3}, 3, rng);
}

TEST(DensityMatrix, RejectsViolatedInvariants) {
  ComplexMatrix m = ComplexMatrix::Identity(2, 2) / 2.0;
  m(0, 1) = 0.1;  // not Hermitian
  try {
    DensityMatrix bad({2}, m);
    FAIL() << "expected InvalidState";
  } catch (const InvalidState& e) {
    EXPECT_EQ(e.invariant(), "hermiticity");
    EXPECT_NEAR(e.residual(), 0.1, 1e-15);
  }

  EXPECT_THROW(DensityMatrix({2}, ComplexMatrix::Identity(2, 2)), InvalidState);

  ComplexMatrix neg = ComplexMatrix::Zero(2, 2);
  neg(0, 0) = 1.2;
  neg(1, 1) = -0.2;
  try {
    DensityMatrix bad({2}, neg);
    FAIL() << "expected InvalidState";
  } catch (const InvalidState& e) {
    EXPECT_EQ(e.invariant(), "positive semidefinite");
  }

  EXPECT_THROW(DensityMatrix({2, 2}, ComplexMatrix::Identity(2, 2) / 2.0), DimensionMismatch);
  EXPECT_THROW(DensityMatrix({1, 2}, ComplexMatrix::Identity(2, 2) / 2.0), InvalidArgument);
}

TEST(PartialTrace, ProductStateFactorizes) {
  const DensityMatrix a = mixed_qubit(0.3);
  const DensityMatrix b = mixed_qutrit();
  const DensityMatrix ab = tensor_product(a, b);
  const std::array<int, 1> keep_a{0}, keep_b{1};
  EXPECT_LT((partial_trace(ab, keep_a).matrix() - a.matrix()).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_LT((partial_trace(ab, keep_b).matrix() - b.matrix()).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_EQ(partial_trace(ab, keep_b).dims(), std::vector<int>{3});
}

TEST(PartialTrace, MaximallyEntangledReducesToMaximallyMixed) {
  const std::array<int, 1> keep{0};
  const DensityMatrix reduced = partial_trace(max_entangled(3), keep);
  EXPECT_LT((reduced.matrix() - ComplexMatrix::Identity(3, 3) / 3.0).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(PartialTrace, BennettMatchesIndexContraction) {
  const DensityMatrix rho = bennett_state();
  const auto expected_a = oracle::reduce_to_a(to_oracle(rho.matrix()), 3, 3);
  const auto expected_b = oracle::reduce_to_b(to_oracle(rho.matrix()), 3, 3);
  const std::array<int, 1> keep_a{0}, keep_b{1};
  const DensityMatrix ra = partial_trace(rho, keep_a);
  EXPECT_LT(max_diff(ra.matrix(), expected_a), 1e-14);
  EXPECT_LT(max_diff(partial_trace(rho, keep_b).matrix(), expected_b), 1e-14);
  EXPECT_NEAR(ra.matrix().trace().real(), 1.0, 1e-14);
}

TEST(PartialTrace, StepwiseEqualsJoint) {
  Rng rng(5);
  const DensityMatrix rho = random_mixed({2, 3, 2}, 4, rng);
  const std::array<int, 2> keep_ab{0, 1};
  const std::array<int, 1> keep_a{0};
  const DensityMatrix stepwise = partial_trace(partial_trace(rho, keep_ab), keep_a);
  const DensityMatrix joint = partial_trace(rho, keep_a);
  EXPECT_LT((stepwise.matrix() - joint.matrix()).cwiseAbs().maxCoeff(), 1e-12);

  // Non-adjacent parties keep their relative order.
  const std::array<int, 2> keep_ac{2, 0};
  EXPECT_EQ(partial_trace(rho, keep_ac).dims(), (std::vector<int>{2, 2}));
}

TEST(PartialTrace, RejectsBadIndices) {
  const DensityMatrix rho = max_entangled(2);
  const std::array<int, 1> out_of_range{2};
  const std::array<int, 2> duplicate{0, 0};
  EXPECT_THROW(partial_trace(rho, out_of_range), InvalidSubsystem);
  EXPECT_THROW(partial_trace(rho, duplicate), InvalidSubsystem);
  EXPECT_THROW(partial_trace(rho, std::span<const int>{}), InvalidSubsystem);
}

TEST(PartialTranspose, ProductState) {
  const DensityMatrix a = mixed_qubit(0.7);
  const DensityMatrix b = mixed_qutrit();
  const ComplexMatrix pt = partial_transpose(tensor_product(a, b), 0);
  const ComplexMatrix expected = kron(a.matrix().transpose(), b.matrix());
  EXPECT_LT((pt - expected).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(PartialTranspose, MaximallyEntangledQubitsHaveNegativeEigenvalue) {
  const DensityMatrix mes = max_entangled(2);
  const ComplexMatrix pt = partial_transpose(mes, 0);
  const auto oracle_ev = oracle::hermitian_eigenvalues(oracle::transpose_a(to_oracle(mes.matrix()), 2, 2));
  EXPECT_NEAR(oracle_ev.front(), -0.5, 1e-12);
  EXPECT_NEAR(min_eigenvalue(pt), oracle_ev.front(), 1e-12);
}

TEST(PartialTranspose, InvolutionAndInvariants) {
  Rng rng(9);
  const DensityMatrix rho = random_mixed({2, 3}, 3, rng);
  for (int s = 0; s < 2; ++s) {
    const ComplexMatrix pt = partial_transpose(rho, s);
    EXPECT_LT(hermiticity_residual(pt), 1e-15);
    EXPECT_NEAR(pt.trace().real(), 1.0, 1e-14);
    const ComplexMatrix twice = partial_transpose(pt, rho.dims(), s);
    EXPECT_LT((twice - rho.matrix()).cwiseAbs().maxCoeff(), 1e-16);
  }
  // Transposing every factor is the full transpose.
  const ComplexMatrix both = partial_transpose(partial_transpose(rho, 0), rho.dims(), 1);
  EXPECT_LT((both - rho.matrix().transpose()).cwiseAbs().maxCoeff(), 1e-16);
  EXPECT_THROW(partial_transpose(rho, 2), InvalidSubsystem);
}

TEST(Realign, ProductStateIsOuterProduct) {
  const DensityMatrix a = mixed_qubit(0.2);
  const DensityMatrix b = mixed_qutrit();
  const ComplexMatrix r = realign(tensor_product(a, b));
  EXPECT_EQ(r.rows(), 4);
  EXPECT_EQ(r.cols(), 9);
  EXPECT_NEAR(trace_norm(r), hs_norm(a.matrix()) * hs_norm(b.matrix()), 1e-13);
  EXPECT_LE(trace_norm(r), 1.0 + 1e-12);
}

TEST(Realign, MatchesReshuffleOracle) {
  const DensityMatrix mes = max_entangled(3);
  const ComplexMatrix r = realign(mes);
  const auto expected = oracle::realign(to_oracle(mes.matrix()), 3, 3);
  EXPECT_LT(max_diff(r, expected), 1e-15);
  EXPECT_NEAR(oracle::trace_norm(expected), 3.0, 1e-12);
  EXPECT_NEAR(trace_norm(r), 3.0, 1e-12);

  Rng rng(3);
  const DensityMatrix rho = random_mixed({2, 3}, 6, rng);
  EXPECT_LT(max_diff(realign(rho), oracle::realign(to_oracle(rho.matrix()), 2, 3)), 1e-16);
}

TEST(Realign, IsLinear) {
  Rng rng(4);
  const DensityMatrix r1 = random_mixed({3, 2}, 2, rng);
  const DensityMatrix r2 = random_mixed({3, 2}, 5, rng);
  const ComplexMatrix combo = 0.3 * r1.matrix() - 1.7 * r2.matrix();
  const ComplexMatrix lhs = realign(combo, 3, 2);
  const ComplexMatrix rhs = 0.3 * realign(r1) - 1.7 * realign(r2);
  EXPECT_LT((lhs - rhs).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Realign, RejectsNonBipartite) {
  EXPECT_THROW(realign(ghz(3)), NotBipartite);
}

TEST(Norms, KnownValues) {
  EXPECT_NEAR(trace_norm(ComplexMatrix(ComplexMatrix::Identity(5, 5))), 5.0, 1e-14);
  EXPECT_EQ(trace_norm(ComplexMatrix(ComplexMatrix::Zero(3, 4))), 0.0);
  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d(0, 0) = 3.0;
  d(1, 1) = -4.0;
  EXPECT_NEAR(trace_norm(d), 7.0, 1e-14);

  EXPECT_NEAR(hs_norm(ComplexMatrix(ComplexMatrix::Identity(5, 5))), std::sqrt(5.0), 1e-14);
  EXPECT_EQ(hs_norm(ComplexMatrix(ComplexMatrix::Zero(3, 4))), 0.0);
  EXPECT_NEAR(hs_norm(d), 5.0, 1e-14);
}

TEST(Norms, UnitaryInvarianceAndOrdering) {
  Rng rng(2024);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 25; ++trial) {
    const int rows = 2 + trial % 5, cols = 3 + trial % 4;
    ComplexMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        const double re = normal(rng);
        const double im = normal(rng);
        m(i, j) = Complex(re, im);
      }
    const ComplexMatrix u = haar_unitary(rows, rng);
    const ComplexMatrix v = haar_unitary(cols, rng);
    EXPECT_NEAR(trace_norm(ComplexMatrix(u * m * v)), trace_norm(m), 1e-9);
    EXPECT_GE(trace_norm(m), hs_norm(m));
    EXPECT_GE(hs_norm(m), 0.0);
    EXPECT_NEAR(trace_norm(m), oracle::trace_norm(to_oracle(m)), 1e-10);
  }
}

TEST(MinEigenvalue, KnownValues) {
  EXPECT_NEAR(min_eigenvalue(ComplexMatrix::Identity(4, 4)), 1.0, 1e-15);
  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d(0, 0) = 0.2;
  d(1, 1) = 0.8;
  EXPECT_NEAR(min_eigenvalue(d), 0.2, 1e-15);
  EXPECT_NEAR(min_eigenvalue(partial_transpose(max_entangled(2), 0)), -0.5, 1e-12);
}

TEST(MinEigenvalue, RejectsNonHermitian) {
  ComplexMatrix m = ComplexMatrix::Identity(2, 2);
  m(0, 1) = 1e-6;
  EXPECT_THROW(min_eigenvalue(m), NotHermitian);
  m(0, 1) = 1e-12;  // within tolerance
  EXPECT_NO_THROW(min_eigenvalue(m));
}

TEST(DensityMatrix, GeneratedStatesSatisfyInvariants) {
  Rng rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    const DensityMatrix rho = random_mixed({2, 2, 3}, 1 + trial % 12, rng);
    const StateResiduals r = state_residuals(rho.matrix());
    EXPECT_LE(r.hermiticity, kStateTolerance);
    EXPECT_LE(r.trace, kStateTolerance);
    EXPECT_LE(r.negativity, kStateTolerance);
  }
}

}  // namespace
}  // namespace covmat
