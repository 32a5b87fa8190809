#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace covmat {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Absolute tolerance for the Hermiticity, trace and PSD checks on states.
inline constexpr double kStateTolerance = 1e-10;

/// Residuals of the three density-matrix invariants for a candidate matrix.
struct StateResiduals {
  double hermiticity = 0.0;  // max |rho - rho^dagger| entry
  double trace = 0.0;        // |Tr rho - 1|
  double negativity = 0.0;   // max(0, -lambda_min)
};

StateResiduals state_residuals(const ComplexMatrix& m);

/// A multipartite quantum state: a Hermitian, unit-trace, positive
/// semidefinite matrix together with the dimensions of its tensor factors.
///
/// Subsystems are ordered lexicographically: party 0 is the most
/// significant index of the composite basis.
class DensityMatrix {
 public:
  /// Validates every invariant and throws InvalidState on violation.
  DensityMatrix(std::vector<int> dims, ComplexMatrix matrix);

  const std::vector<int>& dims() const noexcept { return dims_; }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }

  int parties() const noexcept { return static_cast<int>(dims_.size()); }
  int total_dim() const noexcept { return static_cast<int>(matrix_.rows()); }
  int dim(int party) const { return dims_.at(static_cast<std::size_t>(party)); }

  /// Tr(rho^2).
  double purity() const;

 private:
  std::vector<int> dims_;
  ComplexMatrix matrix_;
};

/// Product of dims; throws InvalidArgument on an empty list or a dim < 1.
int product_of(std::span<const int> dims);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Traces out every subsystem not listed in `keep`. The kept factors stay in
/// their original relative order regardless of the order given.
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep);

/// Transposes the tensor factor `subsystem` of a matrix acting on the
/// composite space with the given dims.
ComplexMatrix partial_transpose(const ComplexMatrix& m, std::span<const int> dims,
                                int subsystem);
ComplexMatrix partial_transpose(const DensityMatrix& rho, int subsystem);

/// Realignment of a bipartite M x N operator:
///   R_{(i k),(j l)} = rho_{(i j),(k l)}
/// where i, k index A (row, column) and j, l index B (row, column). The
/// result is M^2 x N^2.
ComplexMatrix realign(const ComplexMatrix& m, int dim_a, int dim_b);
ComplexMatrix realign(const DensityMatrix& rho);

RealVector singular_values(const ComplexMatrix& m);
RealVector singular_values(const RealMatrix& m);

/// Sum of singular values (Ky Fan / trace norm).
double trace_norm(const ComplexMatrix& m);
double trace_norm(const RealMatrix& m);

/// Frobenius norm.
double hs_norm(const ComplexMatrix& m);
double hs_norm(const RealMatrix& m);

/// Ascending eigenvalues of the Hermitian part of `h`. Throws NotHermitian
/// when `h` deviates from its adjoint by more than `tolerance`.
RealVector hermitian_eigenvalues(const ComplexMatrix& h, double tolerance = kStateTolerance);

double min_eigenvalue(const ComplexMatrix& h, double tolerance = kStateTolerance);

/// max |m - m^dagger| over all entries.
double hermiticity_residual(const ComplexMatrix& m);

}  // namespace covmat
