#include "covmat/observables.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "covmat/error.hpp"

namespace covmat {

namespace {
constexpr double kElementTolerance = 1e-12;
constexpr double kOrthogonalityTolerance = 1e-10;
}  // namespace

ObservableBasis::ObservableBasis(int dim, std::vector<ComplexMatrix> elements, int padded_count)
    : dim_(dim), elements_(std::move(elements)) {
  if (dim_ < 2) throw InvalidArgument("observable basis dimension must be at least 2");
  if (static_cast<int>(elements_.size()) != dim_ * dim_) {
    throw DimensionMismatch("observable basis needs d^2 = " + std::to_string(dim_ * dim_) +
                            " elements, got " + std::to_string(elements_.size()));
  }
  for (const auto& e : elements_) {
    if (e.rows() != dim_ || e.cols() != dim_) {
      throw DimensionMismatch("observable has wrong shape for dimension " + std::to_string(dim_));
    }
    if (hermiticity_residual(e) > kElementTolerance) {
      throw NotHermitian("observable basis element is not Hermitian");
    }
  }
  if (padded_count > 0) {
    if (padded_count < dim_ * dim_) throw InvalidArgument("padded count below d^2");
    elements_.resize(static_cast<std::size_t>(padded_count), ComplexMatrix::Zero(dim_, dim_));
  }
}

ObservableBasis gell_mann_basis(int d) {
  if (d < 2) throw InvalidArgument("gell_mann_basis: d must be at least 2");
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const Complex i_unit(0.0, 1.0);

  std::vector<ComplexMatrix> out;
  out.reserve(static_cast<std::size_t>(d * d));
  out.push_back(ComplexMatrix::Identity(d, d) / std::sqrt(static_cast<double>(d)));

  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      ComplexMatrix m = ComplexMatrix::Zero(d, d);
      m(j, k) = m(k, j) = inv_sqrt2;
      out.push_back(std::move(m));
    }
  }
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      ComplexMatrix m = ComplexMatrix::Zero(d, d);
      m(j, k) = -i_unit * inv_sqrt2;
      m(k, j) = i_unit * inv_sqrt2;
      out.push_back(std::move(m));
    }
  }
  for (int l = 1; l < d; ++l) {
    ComplexMatrix m = ComplexMatrix::Zero(d, d);
    const double norm = 1.0 / std::sqrt(static_cast<double>(l) * (l + 1));
    for (int j = 0; j < l; ++j) m(j, j) = norm;
    m(l, l) = -static_cast<double>(l) * norm;
    out.push_back(std::move(m));
  }
  return ObservableBasis(d, std::move(out));
}

ObservableBasis pad_basis(const ObservableBasis& basis, int target) {
  if (target < basis.logical_count()) {
    throw InvalidArgument("pad_basis: target " + std::to_string(target) + " below d^2 = " +
                          std::to_string(basis.logical_count()));
  }
  std::vector<ComplexMatrix> logical(basis.elements().begin(),
                                     basis.elements().begin() + basis.logical_count());
  return ObservableBasis(basis.dim(), std::move(logical), target);
}

ObservableBasis rotate_basis(const ObservableBasis& basis, const RealMatrix& u) {
  const int n = basis.logical_count();
  if (u.rows() != n || u.cols() != n) {
    throw DimensionMismatch("rotate_basis: rotation must be " + std::to_string(n) + "x" +
                            std::to_string(n));
  }
  const double residual = (u * u.transpose() - RealMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
  if (residual > kOrthogonalityTolerance) {
    std::ostringstream os;
    os << "rotate_basis: matrix is not orthogonal (residual " << residual << ")";
    throw InvalidArgument(os.str());
  }

  std::vector<ComplexMatrix> rotated;
  rotated.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    ComplexMatrix m = ComplexMatrix::Zero(basis.dim(), basis.dim());
    for (int l = 0; l < n; ++l) m += u(k, l) * basis[l];
    // Real combinations of Hermitian matrices; strip rounding asymmetry.
    rotated.push_back(0.5 * (m + m.adjoint()));
  }
  const int padded = basis.padded_count() > n ? basis.padded_count() : 0;
  return ObservableBasis(basis.dim(), std::move(rotated), padded);
}

std::vector<ObservableBasis> gell_mann_bases(std::span<const int> dims) {
  int target = 0;
  for (int d : dims) target = std::max(target, d * d);
  std::vector<ObservableBasis> out;
  out.reserve(dims.size());
  for (int d : dims) out.push_back(pad_basis(gell_mann_basis(d), target));
  return out;
}

ComplexMatrix embed(const ComplexMatrix& op, std::span<const int> dims, int party) {
  if (party < 0 || party >= static_cast<int>(dims.size())) {
    throw InvalidSubsystem("embed: party out of range");
  }
  if (op.rows() != dims[party] || op.cols() != dims[party]) {
    throw DimensionMismatch("embed: operator does not match subsystem dimension");
  }
  int before = 1, after = 1;
  for (int p = 0; p < party; ++p) before *= dims[p];
  for (int p = party + 1; p < static_cast<int>(dims.size()); ++p) after *= dims[p];
  return kron(kron(ComplexMatrix::Identity(before, before), op),
              ComplexMatrix::Identity(after, after));
}

BasisResiduals basis_residuals(const ObservableBasis& basis) {
  BasisResiduals r;
  const int n = basis.logical_count();
  const int d = basis.dim();
  ComplexMatrix square_sum = ComplexMatrix::Zero(d, d);
  for (int k = 0; k < basis.padded_count(); ++k) {
    r.hermiticity = std::max(r.hermiticity, hermiticity_residual(basis[k]));
    if (k >= n) {
      r.padding = std::max(r.padding, basis[k].cwiseAbs().maxCoeff());
      continue;
    }
    square_sum += basis[k] * basis[k];
    for (int l = 0; l < n; ++l) {
      const double expected = k == l ? 1.0 : 0.0;
      r.orthonormality =
          std::max(r.orthonormality, std::abs((basis[k] * basis[l]).trace() - expected));
    }
  }
  r.completeness = (square_sum - static_cast<double>(d) * ComplexMatrix::Identity(d, d))
                       .cwiseAbs()
                       .maxCoeff();
  return r;
}

}  // namespace covmat
