#include "covmat/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "covmat/error.hpp"

namespace covmat {

namespace {

// Row-major strides of the composite index: party 0 is most significant.
std::vector<int> strides_of(std::span<const int> dims) {
  std::vector<int> strides(dims.size(), 1);
  for (int p = static_cast<int>(dims.size()) - 2; p >= 0; --p) {
    strides[p] = strides[p + 1] * dims[p + 1];
  }
  return strides;
}

void require_square(const ComplexMatrix& m, int expected, const char* what) {
  if (m.rows() != m.cols() || m.rows() != expected) {
    std::ostringstream os;
    os << what << ": expected " << expected << "x" << expected << " matrix, got " << m.rows()
       << "x" << m.cols();
    throw DimensionMismatch(os.str());
  }
}

}  // namespace

int product_of(std::span<const int> dims) {
  if (dims.empty()) throw InvalidArgument("empty dimension list");
  int total = 1;
  for (int d : dims) {
    if (d < 1) throw InvalidArgument("subsystem dimension must be positive");
    total *= d;
  }
  return total;
}

double hermiticity_residual(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("hermiticity check needs a square matrix");
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

StateResiduals state_residuals(const ComplexMatrix& m) {
  StateResiduals r;
  r.hermiticity = hermiticity_residual(m);
  r.trace = std::abs(m.trace() - Complex(1.0, 0.0));
  const ComplexMatrix herm = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(herm, Eigen::EigenvaluesOnly);
  r.negativity = std::max(0.0, -es.eigenvalues().minCoeff());
  return r;
}

DensityMatrix::DensityMatrix(std::vector<int> dims, ComplexMatrix matrix)
    : dims_(std::move(dims)) {
  for (int d : dims_) {
    if (d < 2) throw InvalidArgument("every subsystem dimension must be at least 2");
  }
  require_square(matrix, product_of(dims_), "density matrix");

  const StateResiduals r = state_residuals(matrix);
  auto fail = [](const char* invariant, double residual) {
    std::ostringstream os;
    os << "density matrix violates " << invariant << " (residual " << residual << ")";
    throw InvalidState(invariant, residual, os.str());
  };
  if (r.hermiticity > kStateTolerance) fail("hermiticity", r.hermiticity);
  if (r.trace > kStateTolerance) fail("unit trace", r.trace);
  if (r.negativity > kStateTolerance) fail("positive semidefinite", r.negativity);

  // Stored exactly Hermitian; the discarded part is below tolerance.
  matrix_ = 0.5 * (matrix + matrix.adjoint());
}

double DensityMatrix::purity() const { return matrix_.squaredNorm(); }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep) {
  const auto& dims = rho.dims();
  const int n = rho.parties();
  if (keep.empty()) throw InvalidSubsystem("partial_trace: keep set is empty");

  std::vector<bool> kept(n, false);
  for (int k : keep) {
    if (k < 0 || k >= n) {
      throw InvalidSubsystem("partial_trace: subsystem " + std::to_string(k) +
                             " out of range for " + std::to_string(n) + " parties");
    }
    if (kept[k]) throw InvalidSubsystem("partial_trace: duplicate subsystem index");
    kept[k] = true;
  }
  if (static_cast<int>(keep.size()) == n) return rho;

  std::vector<int> keep_parties, rest_parties;
  for (int p = 0; p < n; ++p) (kept[p] ? keep_parties : rest_parties).push_back(p);

  const std::vector<int> strides = strides_of(dims);
  // Offset in the full index contributed by each multi-index of a group.
  auto offsets = [&](const std::vector<int>& parties) {
    int count = 1;
    for (int p : parties) count *= dims[p];
    std::vector<int> out(count, 0);
    for (int idx = 0; idx < count; ++idx) {
      int rem = idx, offset = 0;
      for (auto it = parties.rbegin(); it != parties.rend(); ++it) {
        offset += (rem % dims[*it]) * strides[*it];
        rem /= dims[*it];
      }
      out[idx] = offset;
    }
    return out;
  };
  const std::vector<int> keep_off = offsets(keep_parties);
  const std::vector<int> rest_off = offsets(rest_parties);

  const ComplexMatrix& m = rho.matrix();
  const int dk = static_cast<int>(keep_off.size());
  ComplexMatrix out = ComplexMatrix::Zero(dk, dk);
  for (int a = 0; a < dk; ++a) {
    for (int b = 0; b < dk; ++b) {
      Complex sum = 0.0;
      for (int r : rest_off) sum += m(keep_off[a] + r, keep_off[b] + r);
      out(a, b) = sum;
    }
  }

  std::vector<int> kept_dims;
  for (int p : keep_parties) kept_dims.push_back(dims[p]);
  return DensityMatrix(std::move(kept_dims), std::move(out));
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, std::span<const int> dims,
                                int subsystem) {
  const int n = static_cast<int>(dims.size());
  if (subsystem < 0 || subsystem >= n) {
    throw InvalidSubsystem("partial_transpose: subsystem " + std::to_string(subsystem) +
                           " out of range");
  }
  const int total = product_of(dims);
  require_square(m, total, "partial_transpose");

  const int stride = strides_of(dims)[subsystem];
  const int d = dims[subsystem];
  ComplexMatrix out(total, total);
  for (int row = 0; row < total; ++row) {
    const int i = (row / stride) % d;
    for (int col = 0; col < total; ++col) {
      const int j = (col / stride) % d;
      out(row + (j - i) * stride, col + (i - j) * stride) = m(row, col);
    }
  }
  return out;
}

ComplexMatrix partial_transpose(const DensityMatrix& rho, int subsystem) {
  return partial_transpose(rho.matrix(), rho.dims(), subsystem);
}

ComplexMatrix realign(const ComplexMatrix& m, int dim_a, int dim_b) {
  require_square(m, dim_a * dim_b, "realign");
  ComplexMatrix out(dim_a * dim_a, dim_b * dim_b);
  for (int i = 0; i < dim_a; ++i)
    for (int j = 0; j < dim_b; ++j)
      for (int k = 0; k < dim_a; ++k)
        for (int l = 0; l < dim_b; ++l)
          out(i * dim_a + k, j * dim_b + l) = m(i * dim_b + j, k * dim_b + l);
  return out;
}

ComplexMatrix realign(const DensityMatrix& rho) {
  if (rho.parties() != 2) {
    throw NotBipartite("realign needs a bipartite state, got " + std::to_string(rho.parties()) +
                       " parties");
  }
  return realign(rho.matrix(), rho.dim(0), rho.dim(1));
}

RealVector singular_values(const ComplexMatrix& m) {
  if (m.size() == 0) return RealVector();
  return Eigen::JacobiSVD<ComplexMatrix>(m).singularValues();
}

RealVector singular_values(const RealMatrix& m) {
  if (m.size() == 0) return RealVector();
  return Eigen::JacobiSVD<RealMatrix>(m).singularValues();
}

double trace_norm(const ComplexMatrix& m) { return singular_values(m).sum(); }
double trace_norm(const RealMatrix& m) { return singular_values(m).sum(); }

double hs_norm(const ComplexMatrix& m) { return m.norm(); }
double hs_norm(const RealMatrix& m) { return m.norm(); }

RealVector hermitian_eigenvalues(const ComplexMatrix& h, double tolerance) {
  const double residual = hermiticity_residual(h);
  if (residual > tolerance) {
    std::ostringstream os;
    os << "matrix is not Hermitian (residual " << residual << ")";
    throw NotHermitian(os.str());
  }
  const ComplexMatrix herm = 0.5 * (h + h.adjoint());
  return Eigen::SelfAdjointEigenSolver<ComplexMatrix>(herm, Eigen::EigenvaluesOnly).eigenvalues();
}

double min_eigenvalue(const ComplexMatrix& h, double tolerance) {
  const RealVector ev = hermitian_eigenvalues(h, tolerance);
  if (ev.size() == 0) throw InvalidArgument("min_eigenvalue of an empty matrix");
  return ev.minCoeff();
}

}  // namespace covmat
