#include "covmat/states.hpp"

#include <cmath>
#include <numeric>

#include "covmat/error.hpp"

namespace covmat {

namespace {

ComplexVector ket(int d, int k) {
  ComplexVector v = ComplexVector::Zero(d);
  v(k) = 1.0;
  return v;
}

ComplexVector kron_vec(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

ComplexMatrix projector(const ComplexVector& v) { return v * v.adjoint(); }

}  // namespace

std::vector<ComplexVector> bennett_tiles() {
  const double s = 1.0 / std::sqrt(2.0);
  const ComplexVector k0 = ket(3, 0), k1 = ket(3, 1), k2 = ket(3, 2);
  const ComplexVector all = k0 + k1 + k2;
  return {
      s * kron_vec(k0, k0 - k1),
      s * kron_vec(k0 - k1, k2),
      s * kron_vec(k2, k1 - k2),
      s * kron_vec(k1 - k2, k0),
      kron_vec(all, all) / 3.0,
  };
}

DensityMatrix bennett_state() {
  ComplexMatrix m = ComplexMatrix::Identity(9, 9);
  for (const auto& xi : bennett_tiles()) m -= projector(xi);
  return DensityMatrix({3, 3}, m / 4.0);
}

ComplexVector max_entangled_vector(int d) {
  if (d < 2) throw InvalidArgument("max_entangled: d must be at least 2");
  ComplexVector v = ComplexVector::Zero(d * d);
  for (int i = 0; i < d; ++i) v(i * d + i) = 1.0 / std::sqrt(static_cast<double>(d));
  return v;
}

DensityMatrix max_entangled(int d) { return DensityMatrix({d, d}, projector(max_entangled_vector(d))); }

DensityMatrix pure_state(const ComplexVector& psi, std::vector<int> dims) {
  if (psi.size() != product_of(dims)) {
    throw DimensionMismatch("pure_state: vector length does not match dims");
  }
  if (std::abs(psi.norm() - 1.0) > kStateTolerance) {
    throw InvalidArgument("pure_state: vector is not normalized");
  }
  return DensityMatrix(std::move(dims), projector(psi));
}

DensityMatrix basis_state(int d, int k) {
  if (k < 0 || k >= d) throw InvalidArgument("basis_state: index out of range");
  return DensityMatrix({d}, projector(ket(d, k)));
}

DensityMatrix maximally_mixed(int d) {
  return DensityMatrix({d}, ComplexMatrix::Identity(d, d) / static_cast<double>(d));
}

DensityMatrix ghz(int n_parties, int d) {
  if (n_parties < 2 || d < 2) throw InvalidArgument("ghz: need at least two parties of dim >= 2");
  const std::vector<int> dims(static_cast<std::size_t>(n_parties), d);
  const int total = product_of(dims);
  // |i...i> sits at i * (1 + d + d^2 + ...).
  int repunit = 0;
  for (int p = 0, pw = 1; p < n_parties; ++p, pw *= d) repunit += pw;
  ComplexVector v = ComplexVector::Zero(total);
  for (int i = 0; i < d; ++i) v(i * repunit) = 1.0 / std::sqrt(static_cast<double>(d));
  return DensityMatrix(dims, projector(v));
}

DensityMatrix w_state(int n_parties) {
  if (n_parties < 2) throw InvalidArgument("w_state: need at least two parties");
  const std::vector<int> dims(static_cast<std::size_t>(n_parties), 2);
  ComplexVector v = ComplexVector::Zero(product_of(dims));
  for (int k = 0; k < n_parties; ++k) v(1 << k) = 1.0 / std::sqrt(static_cast<double>(n_parties));
  return DensityMatrix(dims, projector(v));
}

DensityMatrix isotropic(int d, double x) {
  if (x < 0.0 || x > 1.0) throw InvalidArgument("isotropic: weight must lie in [0, 1]");
  const ComplexMatrix noise = ComplexMatrix::Identity(d * d, d * d) / static_cast<double>(d * d);
  return DensityMatrix({d, d}, (1.0 - x) * noise + x * projector(max_entangled_vector(d)));
}

DensityMatrix tensor_product(std::span<const DensityMatrix> factors) {
  if (factors.empty()) throw InvalidArgument("tensor_product: no factors");
  std::vector<int> dims = factors[0].dims();
  ComplexMatrix m = factors[0].matrix();
  for (std::size_t k = 1; k < factors.size(); ++k) {
    m = kron(m, factors[k].matrix());
    dims.insert(dims.end(), factors[k].dims().begin(), factors[k].dims().end());
  }
  return DensityMatrix(std::move(dims), std::move(m));
}

DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b) {
  const std::vector<DensityMatrix> factors{a, b};
  return tensor_product(factors);
}

DensityMatrix mix(const DensityMatrix& a, const DensityMatrix& b, double x) {
  if (x < 0.0 || x > 1.0) throw InvalidArgument("mix: x must lie in [0, 1]");
  if (a.dims() != b.dims()) throw DimensionMismatch("mix: states have different dims");
  if (x == 0.0) return a;
  if (x == 1.0) return b;
  return DensityMatrix(a.dims(), (1.0 - x) * a.matrix() + x * b.matrix());
}

DensityMatrix mixture(std::span<const std::pair<double, DensityMatrix>> terms) {
  if (terms.empty()) throw InvalidArgument("mixture: no terms");
  double total = 0.0;
  ComplexMatrix m = ComplexMatrix::Zero(terms[0].second.total_dim(), terms[0].second.total_dim());
  for (const auto& [w, state] : terms) {
    if (w < 0.0) throw InvalidArgument("mixture: negative weight");
    if (state.dims() != terms[0].second.dims()) {
      throw DimensionMismatch("mixture: states have different dims");
    }
    total += w;
    m += w * state.matrix();
  }
  if (std::abs(total - 1.0) > 1e-12) throw InvalidArgument("mixture: weights do not sum to 1");
  return DensityMatrix(terms[0].second.dims(), std::move(m));
}

DensityMatrix apply_local_unitaries(const DensityMatrix& rho,
                                    std::span<const ComplexMatrix> unitaries) {
  if (static_cast<int>(unitaries.size()) != rho.parties()) {
    throw DimensionMismatch("apply_local_unitaries: need one unitary per party");
  }
  for (int p = 0; p < rho.parties(); ++p) {
    const ComplexMatrix& up = unitaries[static_cast<std::size_t>(p)];
    if (up.rows() != rho.dim(p) || up.cols() != rho.dim(p)) {
      throw DimensionMismatch("apply_local_unitaries: unitary shapes do not match dims");
    }
  }
  ComplexMatrix u = unitaries[0];
  for (std::size_t k = 1; k < unitaries.size(); ++k) u = kron(u, unitaries[k]);
  return DensityMatrix(rho.dims(), u * rho.matrix() * u.adjoint());
}

ComplexVector haar_vector(int dim, Rng& rng) {
  std::normal_distribution<double> normal;
  ComplexVector v(dim);
  for (int i = 0; i < dim; ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    v(i) = Complex(re, im);
  }
  return v / v.norm();
}

ComplexMatrix haar_unitary(int dim, Rng& rng) {
  std::normal_distribution<double> normal;
  ComplexMatrix g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    const Complex diag = r(j, j);
    q.col(j) *= diag / std::abs(diag);
  }
  return q;
}

DensityMatrix random_pure(std::vector<int> dims, std::uint64_t seed) {
  Rng rng(seed);
  return random_pure(std::move(dims), rng);
}

DensityMatrix random_pure(std::vector<int> dims, Rng& rng) {
  const ComplexVector psi = haar_vector(product_of(dims), rng);
  return DensityMatrix(std::move(dims), projector(psi));
}

DensityMatrix random_separable(std::vector<int> dims, int terms, std::uint64_t seed) {
  Rng rng(seed);
  return random_separable(std::move(dims), terms, rng);
}

DensityMatrix random_separable(std::vector<int> dims, int terms, Rng& rng) {
  if (terms < 1) throw InvalidArgument("random_separable: need at least one term");
  const int total = product_of(dims);
  std::exponential_distribution<double> exponential(1.0);
  std::vector<double> weights(static_cast<std::size_t>(terms));
  for (double& w : weights) w = exponential(rng);
  const double sum = std::accumulate(weights.begin(), weights.end(), 0.0);

  ComplexMatrix m = ComplexMatrix::Zero(total, total);
  for (int k = 0; k < terms; ++k) {
    ComplexVector psi = haar_vector(dims[0], rng);
    for (std::size_t p = 1; p < dims.size(); ++p) psi = kron_vec(psi, haar_vector(dims[p], rng));
    m += (weights[k] / sum) * projector(psi);
  }
  return DensityMatrix(std::move(dims), std::move(m));
}

DensityMatrix random_mixed(std::vector<int> dims, int rank, Rng& rng) {
  if (rank < 1) throw InvalidArgument("random_mixed: rank must be positive");
  const int total = product_of(dims);
  std::normal_distribution<double> normal;
  ComplexMatrix g(total, rank);
  for (int i = 0; i < total; ++i)
    for (int j = 0; j < rank; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  ComplexMatrix m = g * g.adjoint();
  m /= m.trace().real();
  return DensityMatrix(std::move(dims), std::move(m));
}

}  // namespace covmat
