#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "covmat/linalg.hpp"

namespace covmat {

/// The 3x3 bound entangled state built from the five "tiles" product
/// vectors,
///   rho = (I_9 - sum_{i=0}^{4} |xi_i><xi_i|) / 4,
/// with |xi_0> = |0>(|0>-|1>)/sqrt2, |xi_1> = (|0>-|1>)|2>/sqrt2,
/// |xi_2> = |2>(|1>-|2>)/sqrt2, |xi_3> = (|1>-|2>)|0>/sqrt2 and
/// |xi_4> = (|0>+|1>+|2>)(|0>+|1>+|2>)/3. PPT yet entangled.
DensityMatrix bennett_state();

/// The five tile vectors above, in order.
std::vector<ComplexVector> bennett_tiles();

/// (1/sqrt d) sum_i |ii> as a state vector.
ComplexVector max_entangled_vector(int d);
DensityMatrix max_entangled(int d);

/// |psi><psi| with the given subsystem dims; psi must be normalized.
DensityMatrix pure_state(const ComplexVector& psi, std::vector<int> dims);

DensityMatrix basis_state(int d, int k);
DensityMatrix maximally_mixed(int d);

/// (1/sqrt d) sum_i |i...i> on n parties of dimension d.
DensityMatrix ghz(int n_parties, int d = 2);

/// (1/sqrt n) sum_k |0..1_k..0> on n qubits.
DensityMatrix w_state(int n_parties);

/// (1 - x) I/d^2 + x |Phi_d><Phi_d|.
DensityMatrix isotropic(int d, double x);

DensityMatrix tensor_product(std::span<const DensityMatrix> factors);
DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b);

/// (1 - x) a + x b for x in [0, 1]; dims must agree.
DensityMatrix mix(const DensityMatrix& a, const DensityMatrix& b, double x);

/// sum_k w_k rho_k. Weights must be nonnegative and sum to 1 within 1e-12.
DensityMatrix mixture(std::span<const std::pair<double, DensityMatrix>> terms);

/// Conjugates by U_0 x U_1 x ... ; one unitary per party.
DensityMatrix apply_local_unitaries(const DensityMatrix& rho, std::span<const ComplexMatrix> unitaries);

// Random ensembles. All take an explicit engine or seed and are
// reproducible; Haar vectors are normalized complex Gaussians.

using Rng = std::mt19937_64;

ComplexVector haar_vector(int dim, Rng& rng);
/// Haar-random unitary (QR of a complex Ginibre matrix with phase fix).
ComplexMatrix haar_unitary(int dim, Rng& rng);

DensityMatrix random_pure(std::vector<int> dims, std::uint64_t seed);
DensityMatrix random_pure(std::vector<int> dims, Rng& rng);

/// sum_{k<terms} p_k (x)_i |psi_k^i><psi_k^i| with Haar local factors and
/// flat-Dirichlet weights.
DensityMatrix random_separable(std::vector<int> dims, int terms, std::uint64_t seed);
DensityMatrix random_separable(std::vector<int> dims, int terms, Rng& rng);

/// Induced-measure mixed state: Tr_env of a Haar vector on D x rank.
DensityMatrix random_mixed(std::vector<int> dims, int rank, Rng& rng);

}  // namespace covmat
