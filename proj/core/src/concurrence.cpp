#include "covmat/concurrence.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "covmat/covariance.hpp"
#include "covmat/error.hpp"

namespace covmat {

namespace {

void require_bipartite(const DensityMatrix& rho, const char* what) {
  if (rho.parties() != 2) {
    throw NotBipartite(std::string(what) + " needs a bipartite state, got " +
                       std::to_string(rho.parties()) + " parties");
  }
}

int smaller_dim(const DensityMatrix& rho) { return std::min(rho.dim(0), rho.dim(1)); }

double lur_denominator(int m) { return std::sqrt(2.0 * m * (m - 1)); }

}  // namespace

double pure_concurrence(const ComplexVector& psi, int dim_a, int dim_b) {
  if (psi.size() != static_cast<Eigen::Index>(dim_a) * dim_b) {
    throw DimensionMismatch("pure_concurrence: vector length does not match dims");
  }
  if (std::abs(psi.norm() - 1.0) > kStateTolerance) {
    throw InvalidArgument("pure_concurrence: state vector is not normalized");
  }
  // rho_A = Psi Psi^dagger with Psi the dim_a x dim_b coefficient matrix.
  const ComplexMatrix coeff =
      Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
          psi.data(), dim_a, dim_b);
  const ComplexMatrix reduced = coeff * coeff.adjoint();
  const double purity = reduced.squaredNorm();
  return std::sqrt(std::max(0.0, 2.0 * (1.0 - purity)));
}

double bound_ccnr_ppt(const DensityMatrix& rho) {
  require_bipartite(rho, "bound_ccnr_ppt");
  const int m = smaller_dim(rho);
  const double pt = hermitian_eigenvalues(partial_transpose(rho, 0)).cwiseAbs().sum();
  const double re = trace_norm(realign(rho));
  return std::sqrt(2.0 / (m * (m - 1.0))) * (std::max(pt, re) - 1.0);
}

double bound_lur(const DensityMatrix& rho, const ObservableBasis& basis_a,
                 const ObservableBasis& basis_b) {
  require_bipartite(rho, "bound_lur");
  const int m = smaller_dim(rho);
  const double total = rho.dim(0) + rho.dim(1) - 2.0;
  return (total - joint_variance_sum(rho, basis_a, basis_b)) / lur_denominator(m);
}

double bound_lur(const DensityMatrix& rho) {
  require_bipartite(rho, "bound_lur");
  const auto bases = gell_mann_bases(rho.dims());
  return bound_lur(rho, bases[0], bases[1]);
}

double bound_optimized(const DensityMatrix& rho) {
  require_bipartite(rho, "bound_optimized");
  const auto bases = gell_mann_bases(rho.dims());
  const RealMatrix c = correlation_block(rho, 0, 1, bases[0], bases[1]);
  const auto purities = reduced_purities(rho);
  const double numerator = 2.0 * trace_norm(c) - (1.0 - purities[0]) - (1.0 - purities[1]);
  return numerator / lur_denominator(smaller_dim(rho));
}

std::pair<ObservableBasis, ObservableBasis> optimal_lur_bases(const DensityMatrix& rho) {
  require_bipartite(rho, "optimal_lur_bases");
  const ObservableBasis a = gell_mann_basis(rho.dim(0));
  const ObservableBasis b = gell_mann_basis(rho.dim(1));
  const RealMatrix c = correlation_block(rho, 0, 1, a, b);

  Eigen::JacobiSVD<RealMatrix> svd(c, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const RealMatrix u_a = svd.matrixU().transpose();
  const RealMatrix u_b = -svd.matrixV().transpose();

  const int length = std::max(a.logical_count(), b.logical_count());
  return {pad_basis(rotate_basis(a, u_a), length), pad_basis(rotate_basis(b, u_b), length)};
}

ConcurrenceBounds concurrence_bounds(const DensityMatrix& rho) {
  require_bipartite(rho, "concurrence_bounds");
  ConcurrenceBounds out;
  out.m = smaller_dim(rho);
  out.n = std::max(rho.dim(0), rho.dim(1));
  out.swapped = rho.dim(1) < rho.dim(0);

  out.ppt_norm = hermitian_eigenvalues(partial_transpose(rho, 0)).cwiseAbs().sum();
  out.realign_norm = trace_norm(realign(rho));
  out.bound_ccnr_ppt =
      std::sqrt(2.0 / (out.m * (out.m - 1.0))) * (std::max(out.ppt_norm, out.realign_norm) - 1.0);
  out.bound_lur = bound_lur(rho);
  out.bound_optimized = bound_optimized(rho);

  if (std::abs(rho.purity() - 1.0) <= kStateTolerance) {
    const std::array<int, 1> keep{0};
    const double purity_a = partial_trace(rho, keep).purity();
    out.exact_pure = std::sqrt(std::max(0.0, 2.0 * (1.0 - purity_a)));
  }
  out.best = std::max({0.0, out.bound_ccnr_ppt, out.bound_lur, out.bound_optimized});
  return out;
}

}  // namespace covmat
