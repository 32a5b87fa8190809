#pragma once

#include <vector>

#include "covmat/linalg.hpp"

namespace covmat {

/// An orthonormal basis of Hermitian observables on one d-dimensional
/// subsystem, tr(G_k G_l) = delta_kl, optionally followed by zero observables
/// so that subsystems of different dimensions can share a common index range.
class ObservableBasis {
 public:
  /// `elements` holds the d^2 basis observables; `padded_count` (>= d^2)
  /// appends zero matrices. Throws if an element is not d x d and Hermitian
  /// within 1e-12 or if the element count is not d^2.
  ObservableBasis(int dim, std::vector<ComplexMatrix> elements, int padded_count = 0);

  int dim() const noexcept { return dim_; }
  /// d^2, the number of genuine (non-padding) observables.
  int logical_count() const noexcept { return dim_ * dim_; }
  /// Total length including zero padding.
  int padded_count() const noexcept { return static_cast<int>(elements_.size()); }

  const ComplexMatrix& operator[](int k) const { return elements_.at(static_cast<std::size_t>(k)); }
  const std::vector<ComplexMatrix>& elements() const noexcept { return elements_; }

 private:
  int dim_;
  std::vector<ComplexMatrix> elements_;
};

/// The normalized generalized Gell-Mann basis: I/sqrt(d) first, then the
/// symmetric generators (E_jk + E_kj)/sqrt(2) for j < k in lexicographic
/// order, the antisymmetric ones (-i E_jk + i E_kj)/sqrt(2) in the same
/// order, and finally the diagonal generators for l = 1..d-1,
///   (sum_{j<l} E_jj - l E_ll) / sqrt(l (l+1)).
/// For d = 2 this is {I, sigma_x, sigma_y, sigma_z} / sqrt(2).
ObservableBasis gell_mann_basis(int d);

/// Appends zero observables until the basis has `target` elements.
ObservableBasis pad_basis(const ObservableBasis& basis, int target);

/// Returns {sum_l u_{kl} G_l} over the d^2 logical observables; padding is
/// kept as is. `u` must be real orthogonal of size d^2 within 1e-10.
ObservableBasis rotate_basis(const ObservableBasis& basis, const RealMatrix& u);

/// Gell-Mann bases for every party, all padded to the largest d^2.
std::vector<ObservableBasis> gell_mann_bases(std::span<const int> dims);

/// Embeds a local observable acting on `party` into the full space,
/// I x ... x op x ... x I.
ComplexMatrix embed(const ComplexMatrix& op, std::span<const int> dims, int party);

/// Diagnostics for the algebraic identities an orthonormal basis satisfies.
struct BasisResiduals {
  double hermiticity = 0.0;      // max over elements
  double orthonormality = 0.0;   // max |tr(G_k G_l) - delta_kl|, logical part
  double completeness = 0.0;     // max entry of |sum_k G_k^2 - d I|
  double padding = 0.0;          // max |entry| of the padding elements
};

BasisResiduals basis_residuals(const ObservableBasis& basis);

}  // namespace covmat
