#pragma once

#include "rpchain/symmetry.hpp"

namespace rpchain {

struct SchmidtData {
  std::vector<double> values;      // descending, nonnegative, sum 1
  Mat left_vectors;                // columns are the orthonormal xi_i
  std::vector<std::vector<int>> degeneracy_blocks;  // equal within 1e-10
};

/// Reshape of a full-system vector with the right index pulled back
/// through reflection-conjugation: M_{i,m} = Psi_{(i, sigma(m))}.
/// Psi is J-invariant iff M is Hermitian; Psi lies in the natural
/// positive cone iff M is PSD.
struct ConeCoordinates {
  Mat matrix;
  double herm_defect = 0.0;
  double min_eigenvalue = 0.0;  // of the Hermitian part
  int schmidt_rank = 0;
};

/// Eigendecomposition of a left density matrix, sorted descending.
/// Eigenvalues within 1e-12 of zero are floored to exactly zero; this
/// keeps sqrt-amplified solver noise out of the purification.
SchmidtData schmidt(const QuantumState& rho_left);

/// Omega = sum_i sqrt(lambda_i) xi_i (x) reflect-conj(xi_i); the cone
/// representative (no residual phase freedom).
QuantumState canonical_purification(const QuantumState& rho_left,
                                    const ReflectionFrame& rf);

ConeCoordinates cone_coordinates(const QuantumState& psi,
                                 const ReflectionFrame& rf);

/// Assemble the vector sum_i sqrt(lambda_i) e^{i phi_i} xi_i (x) xi_i'
/// for explicit Schmidt data; phase all-zero gives the canonical
/// purification.
Vec purification_vector(const SchmidtData& sd,
                        const std::vector<double>& phases,
                        const ReflectionFrame& rf);

struct UniquenessReport {
  int grid = 0;
  long total = 0;          // phase vectors tried
  long passed = 0;         // vectors passing the natural-cone test
  bool zero_phase_passed = false;
  bool only_zero_phase = false;
};

/// Brute-force oracle for uniqueness of the j-positive purification:
/// sweeps all phase assignments on a discrete grid and tests each
/// resulting vector for membership in the natural positive cone
/// (J-fixed and PSD cone coordinates). Refuses degenerate spectra.
UniquenessReport uniqueness_oracle(const QuantumState& rho_left,
                                   const ReflectionFrame& rf, int grid);

}  // namespace rpchain
