#pragma once

#include <map>
#include <utility>
#include <vector>

#include "covmat/linalg.hpp"
#include "covmat/observables.hpp"

namespace covmat {

/// Block decomposition of the covariance matrix of an N-party state with
/// respect to one local observable basis per party.
///
/// `diag[i]` is gamma(rho_i, basis_i). `cross.at({i, j})` (i < j) holds
///   <G^i_m x G^j_n> - <G^i_m><G^j_n>.
/// For two parties these are the blocks A, B and C; for three, A, B, C and
/// D = (0,1), E = (0,2), F = (1,2).
struct CovarianceBlocks {
  int n_parties = 0;
  std::vector<RealMatrix> diag;
  std::map<std::pair<int, int>, RealMatrix> cross;

  /// Block (i, j) for any i != j; returns the transpose for i > j.
  RealMatrix cross_block(int i, int j) const;
  /// Assembles the full symmetric covariance matrix from the blocks.
  RealMatrix assemble() const;
};

/// Tr(rho m) for Hermitian m. Throws DimensionMismatch on shape mismatch
/// and NotHermitian if the imaginary part exceeds 1e-10.
double expectation(const DensityMatrix& rho, const ComplexMatrix& m);

/// gamma_kl = (<M_k M_l> + <M_l M_k>)/2 - <M_k><M_l>.
RealMatrix covariance_matrix(const DensityMatrix& rho, std::span<const ComplexMatrix> observables);

/// Cross-correlation block between parties i and j computed from the
/// two-party reduced state. Bases must match the subsystem dimensions;
/// padding rows/columns come out zero.
RealMatrix correlation_block(const DensityMatrix& rho, int i, int j,
                             const ObservableBasis& basis_i, const ObservableBasis& basis_j);

/// Every diagonal and cross block; one basis per party.
CovarianceBlocks all_blocks(const DensityMatrix& rho, std::span<const ObservableBasis> bases);

/// sum_k Var_rho(G^A_k x I + I x G^B_k) for a bipartite state. Bases must
/// have the same padded length.
double joint_variance_sum(const DensityMatrix& rho, const ObservableBasis& basis_a,
                          const ObservableBasis& basis_b);

/// tr(rho_i^2) for every party i.
std::vector<double> reduced_purities(const DensityMatrix& rho);

}  // namespace covmat
