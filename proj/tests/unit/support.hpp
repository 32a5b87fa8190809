#pragma once

#include <gtest/gtest.h>

#include "brute_force.hpp"
#include "covmat/linalg.hpp"
#include "covmat/states.hpp"

namespace covmat::testing {

inline oracle::CMat to_oracle(const ComplexMatrix& m) {
  oracle::CMat out = oracle::zeros(static_cast<int>(m.rows()), static_cast<int>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

inline double max_diff(const ComplexMatrix& a, const oracle::CMat& b) {
  double d = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) d = std::max(d, std::abs(a(i, j) - b[i][j]));
  return d;
}

inline double max_diff(const RealMatrix& a, const oracle::RMat& b) {
  double d = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) d = std::max(d, std::abs(a(i, j) - b[i][j]));
  return d;
}

/// Random real orthogonal matrix from the QR of a Gaussian matrix.
inline RealMatrix random_orthogonal(int n, Rng& rng) {
  std::normal_distribution<double> normal;
  RealMatrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = normal(rng);
  Eigen::HouseholderQR<RealMatrix> qr(g);
  return qr.householderQ();
}

}  // namespace covmat::testing
