#pragma once

#include <optional>
#include <string>
#include <utility>

#include "covmat/linalg.hpp"
#include "covmat/observables.hpp"

namespace covmat {

/// Lower bounds on the concurrence of a bipartite state.
///
/// Values are raw: a negative bound means the state is not detected by that
/// bound. Only `best` is clamped at zero. `m <= n` are the local dimensions
/// after ordering; `swapped` records whether party B was the smaller one.
struct ConcurrenceBounds {
  int m = 0;
  int n = 0;
  bool swapped = false;
  double ppt_norm = 0.0;      // ||rho^{T_A}||_tr
  double realign_norm = 0.0;  // ||R(rho)||_tr
  double bound_ccnr_ppt = 0.0;
  double bound_lur = 0.0;
  std::string lur_basis = "gell-mann";
  double bound_optimized = 0.0;
  std::optional<double> exact_pure;
  double best = 0.0;

  bool operator==(const ConcurrenceBounds&) const = default;
};

/// sqrt(2 (1 - tr rho_A^2)) for a normalized bipartite pure state.
double pure_concurrence(const ComplexVector& psi, int dim_a, int dim_b);

/// sqrt(2 / (M (M - 1))) * (max(||rho^{T_A}||, ||R(rho)||) - 1).
double bound_ccnr_ppt(const DensityMatrix& rho);

/// (M + N - 2 - sum_i Var(G^A_i x I + I x G^B_i)) / sqrt(2 M (M - 1)) for
/// the given local orthonormal observables (padded to equal length).
double bound_lur(const DensityMatrix& rho, const ObservableBasis& basis_a,
                 const ObservableBasis& basis_b);
/// Same, with Gell-Mann bases on both sides.
double bound_lur(const DensityMatrix& rho);

/// (2 ||C||_KF - (1 - tr rho_A^2) - (1 - tr rho_B^2)) / sqrt(2 M (M - 1)).
/// Basis independent: the supremum of bound_lur over all local orthonormal
/// observables, obtained in closed form from the singular values of C.
double bound_optimized(const DensityMatrix& rho);

/// Local bases in which bound_lur attains bound_optimized. With the SVD
/// C = U S V^T in Gell-Mann bases, A is rotated by U^T and B by -V^T, so the
/// rotated correlation block is -S and its trace is -||C||_KF.
std::pair<ObservableBasis, ObservableBasis> optimal_lur_bases(const DensityMatrix& rho);

/// Every bound for a bipartite state, plus the exact value when the state
/// is pure (tr rho^2 = 1 within 1e-10).
ConcurrenceBounds concurrence_bounds(const DensityMatrix& rho);

}  // namespace covmat
