#include "covmat/covariance.hpp"

#include <array>
#include <sstream>

#include "covmat/error.hpp"

namespace covmat {

namespace {

constexpr double kImaginaryTolerance = 1e-10;

// Tr(a b) without forming the product.
Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a.transpose().cwiseProduct(b)).sum();
}

double checked_real(Complex z, const char* what) {
  if (std::abs(z.imag()) > kImaginaryTolerance) {
    std::ostringstream os;
    os << what << ": imaginary residue " << z.imag() << " exceeds tolerance";
    throw NotHermitian(os.str());
  }
  return z.real();
}

void check_basis_matches(const ObservableBasis& basis, int dim, int party) {
  if (basis.dim() != dim) {
    throw DimensionMismatch("basis of dimension " + std::to_string(basis.dim()) +
                            " does not match party " + std::to_string(party) + " of dimension " +
                            std::to_string(dim));
  }
}

RealVector local_means(const DensityMatrix& local, const ObservableBasis& basis) {
  RealVector means = RealVector::Zero(basis.padded_count());
  for (int k = 0; k < basis.logical_count(); ++k) means(k) = expectation(local, basis[k]);
  return means;
}

// Cross block for an ordered pair whose reduced state has party order (a, b).
RealMatrix ordered_block(const DensityMatrix& pair_state, const ObservableBasis& basis_a,
                         const ObservableBasis& basis_b) {
  const int da = pair_state.dim(0);
  const int db = pair_state.dim(1);
  const std::array<int, 1> first{0}, second{1};
  const RealVector mean_a = local_means(partial_trace(pair_state, first), basis_a);
  const RealVector mean_b = local_means(partial_trace(pair_state, second), basis_b);

  const ComplexMatrix& m = pair_state.matrix();
  RealMatrix block = RealMatrix::Zero(basis_a.padded_count(), basis_b.padded_count());
  for (int p = 0; p < basis_a.logical_count(); ++p) {
    const ComplexMatrix& a = basis_a[p];
    // sigma = Tr_A[rho (a x I)], so that <a x b> = Tr(sigma b).
    ComplexMatrix sigma = ComplexMatrix::Zero(db, db);
    for (int i = 0; i < da; ++i)
      for (int k = 0; k < da; ++k) {
        const Complex aki = a(k, i);
        if (aki == Complex(0.0, 0.0)) continue;
        sigma += aki * m.block(i * db, k * db, db, db);
      }
    for (int q = 0; q < basis_b.logical_count(); ++q) {
      const double joint = checked_real(trace_of_product(sigma, basis_b[q]), "correlation_block");
      block(p, q) = joint - mean_a(p) * mean_b(q);
    }
  }
  return block;
}

}  // namespace

RealMatrix CovarianceBlocks::cross_block(int i, int j) const {
  if (i == j) throw InvalidSubsystem("cross_block: i == j");
  if (i < j) return cross.at({i, j});
  return cross.at({j, i}).transpose();
}

RealMatrix CovarianceBlocks::assemble() const {
  std::vector<Eigen::Index> offset(diag.size() + 1, 0);
  for (std::size_t i = 0; i < diag.size(); ++i) offset[i + 1] = offset[i] + diag[i].rows();
  RealMatrix full = RealMatrix::Zero(offset.back(), offset.back());
  for (int i = 0; i < n_parties; ++i) {
    full.block(offset[i], offset[i], diag[i].rows(), diag[i].cols()) = diag[i];
    for (int j = i + 1; j < n_parties; ++j) {
      const RealMatrix& c = cross.at({i, j});
      full.block(offset[i], offset[j], c.rows(), c.cols()) = c;
      full.block(offset[j], offset[i], c.cols(), c.rows()) = c.transpose();
    }
  }
  return full;
}

double expectation(const DensityMatrix& rho, const ComplexMatrix& m) {
  if (m.rows() != rho.total_dim() || m.cols() != rho.total_dim()) {
    throw DimensionMismatch("expectation: observable is " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()) + ", state is " +
                            std::to_string(rho.total_dim()) + "-dimensional");
  }
  return checked_real(trace_of_product(rho.matrix(), m), "expectation");
}

RealMatrix covariance_matrix(const DensityMatrix& rho, std::span<const ComplexMatrix> observables) {
  const int n = static_cast<int>(observables.size());
  std::vector<ComplexMatrix> rho_times(observables.size());
  RealVector means(n);
  for (int k = 0; k < n; ++k) {
    means(k) = expectation(rho, observables[k]);
    rho_times[k] = rho.matrix() * observables[k];
  }
  RealMatrix gamma(n, n);
  for (int k = 0; k < n; ++k) {
    for (int l = k; l < n; ++l) {
      // Tr(rho M_k M_l) and Tr(rho M_l M_k).
      const Complex kl = trace_of_product(rho_times[k], observables[l]);
      const Complex lk = trace_of_product(rho_times[l], observables[k]);
      const double sym = checked_real(0.5 * (kl + lk), "covariance_matrix");
      gamma(k, l) = gamma(l, k) = sym - means(k) * means(l);
    }
  }
  return gamma;
}

RealMatrix correlation_block(const DensityMatrix& rho, int i, int j,
                             const ObservableBasis& basis_i, const ObservableBasis& basis_j) {
  const int n = rho.parties();
  if (i == j) throw InvalidSubsystem("correlation_block: parties must differ");
  if (i < 0 || j < 0 || i >= n || j >= n) {
    throw InvalidSubsystem("correlation_block: party index out of range");
  }
  check_basis_matches(basis_i, rho.dim(i), i);
  check_basis_matches(basis_j, rho.dim(j), j);

  const std::array<int, 2> keep{i, j};
  const DensityMatrix pair_state = partial_trace(rho, keep);
  if (i < j) return ordered_block(pair_state, basis_i, basis_j);
  return ordered_block(pair_state, basis_j, basis_i).transpose();
}

CovarianceBlocks all_blocks(const DensityMatrix& rho, std::span<const ObservableBasis> bases) {
  const int n = rho.parties();
  if (static_cast<int>(bases.size()) != n) {
    throw DimensionMismatch("all_blocks: " + std::to_string(bases.size()) + " bases for " +
                            std::to_string(n) + " parties");
  }
  CovarianceBlocks blocks;
  blocks.n_parties = n;
  for (int i = 0; i < n; ++i) {
    check_basis_matches(bases[i], rho.dim(i), i);
    const std::array<int, 1> keep{i};
    blocks.diag.push_back(covariance_matrix(partial_trace(rho, keep), bases[i].elements()));
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      blocks.cross.emplace(std::make_pair(i, j), correlation_block(rho, i, j, bases[i], bases[j]));
  return blocks;
}

double joint_variance_sum(const DensityMatrix& rho, const ObservableBasis& basis_a,
                          const ObservableBasis& basis_b) {
  if (rho.parties() != 2) throw NotBipartite("joint_variance_sum needs a bipartite state");
  check_basis_matches(basis_a, rho.dim(0), 0);
  check_basis_matches(basis_b, rho.dim(1), 1);
  if (basis_a.padded_count() != basis_b.padded_count()) {
    throw DimensionMismatch("joint_variance_sum: bases differ in length (" +
                            std::to_string(basis_a.padded_count()) + " vs " +
                            std::to_string(basis_b.padded_count()) + "); pad the shorter one");
  }
  const ComplexMatrix id_a = ComplexMatrix::Identity(rho.dim(0), rho.dim(0));
  const ComplexMatrix id_b = ComplexMatrix::Identity(rho.dim(1), rho.dim(1));
  double total = 0.0;
  for (int k = 0; k < basis_a.padded_count(); ++k) {
    const ComplexMatrix joint = kron(basis_a[k], id_b) + kron(id_a, basis_b[k]);
    const double mean = expectation(rho, joint);
    total += expectation(rho, joint * joint) - mean * mean;
  }
  return total;
}

std::vector<double> reduced_purities(const DensityMatrix& rho) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(rho.parties()));
  for (int i = 0; i < rho.parties(); ++i) {
    const std::array<int, 1> keep{i};
    out.push_back(partial_trace(rho, keep).purity());
  }
  return out;
}

}  // namespace covmat
