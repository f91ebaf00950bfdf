#pragma once

#include "rpchain/rp.hpp"

namespace rpchain {

/// Stabilizer cluster state on 2N qubits: the simultaneous +1
/// eigenvector of all cyclic Z_{i-1} X_i Z_{i+1}.
QuantumState build_cluster_state(int n_half);

struct ClusterDemoReport {
  int n_half = 0;
  double reduced_state_dev = 0.0;  // || rho_odd - 2^{-N}(1 + X^N) ||
  double zzzz = 0.0;               // psi(Z_1 Z_2N Z_N Z_{N+1})
  double zz_outer = 0.0;           // psi(Z_1 Z_2N)
  double zz_inner = 0.0;           // psi(Z_N Z_{N+1})
  RpCertificate purified_cert;
};

/// Restricts the cluster state to the odd sublattice, canonically
/// purifies with the reflection pairing, and evaluates the long-range
/// correlators.
ClusterDemoReport cluster_purification_demo(int n_half);

/// H = -sum X_i X_{i+1} - sum Z_i on a periodic chain of n_sites qubits.
DenseOperator tfim_hamiltonian(int n_sites, bool periodic = true);

struct GroundState {
  QuantumState state;
  double energy = 0.0;
  double gap = 0.0;
};

/// Lowest eigenvector by dense diagonalization; throws if the gap is
/// below 1e-8 (the periodic TFIM at these sizes is nondegenerate).
GroundState tfim_ground_state(int n_half);
GroundState ground_state_of(const DenseOperator& h, double gap_floor = 1e-8);

struct GibbsDecomposition {
  DenseOperator h_left;   // on the left half
  DenseOperator h_zero;   // full-system coupling, -h_zero in K+
  double beta = 1.0;

  /// H = H_L + H_0 + J H_L J.
  DenseOperator hamiltonian(const ReflectionFrame& rf) const;
};

/// rho = e^{-beta H}/Z via Hermitian eigendecomposition.
Mat gibbs_density(const DenseOperator& h, double beta);

/// RP certificate of the Gibbs state; the hypothesis -H0 in K+ is
/// verified first and failure is a refusal, not a verdict.
RpCertificate gibbs_rp(const GibbsDecomposition& dec,
                       const ReflectionFrame& rf);

struct SpectrumScanEntry {
  double energy = 0.0;
  bool in_degenerate_block = false;
  RpCertificate cert;
};

struct GroundLimitReport {
  std::vector<SpectrumScanEntry> entries;  // energy-ascending
  int passing_count = 0;
  bool ground_is_passing = false;
  bool only_ground_passes = false;
};

/// Full-spectrum scan of H: certifies every eigenstate. Vectors are
/// J-symmetrized first (degenerate blocks are only meaningfully tested
/// on J-invariant combinations).
GroundLimitReport gibbs_ground_limit(const GibbsDecomposition& dec,
                                     const ReflectionFrame& rf);

/// The standard reflection-symmetric TFIM splitting:
/// H_L = -sum_{i<N} X_i X_{i+1} - sum_{i<=N} Z_i,
/// H_0 = -X_N X_{N+1} - X_{2N} X_1.
GibbsDecomposition tfim_decomposition(int n_half, double beta);

}  // namespace rpchain
