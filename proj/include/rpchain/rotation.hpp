#pragma once

#include <random>

#include "rpchain/fermion.hpp"

namespace rpchain {

struct AngularMomentumReport {
  bool is_invariant = false;      // U psi = lambda psi within 1e-10
  Complex eigenvalue{1.0, 0.0};   // <psi, U psi> when invariant
  RpCertificate rp_verdict;
  /// RP + invariant forces eigenvalue 1 (within 1e-9); false marks a
  /// violation of that implication.
  bool proposition_holds = true;
};

AngularMomentumReport angular_momentum(const QuantumState& psi,
                                       const RotationFrame& rot,
                                       const ReflectionFrame& rf);

/// Strictly reflection positive shift-invariant observable on a chain
/// of 2N sites with local dimension d. For d = 2 this is the TFIM
/// ground-state projector; for d = 2^k a stack of k aligned TFIM
/// chains; for other d the 2^k construction compressed by p^{(x)2N}.
DenseOperator build_srp_invariant_observable(int d, int n_half);

/// Applies perturb_state with the strictly RP invariant observable,
/// yielding a strictly RP shift-invariant vector.
QuantumState strictify(const QuantumState& psi, const RotationFrame& rot,
                       const ReflectionFrame& rf);

struct PerronFrobeniusReport {
  double top_eigenvalue = 0.0;
  double top_gap = 0.0;
  bool top_degenerate = false;
  Vec top_eigenvector;
  ConeCoordinates cone;           // PD iff cyclic-and-separating rendering
  RpCertificate projector_cert;   // of |xi><xi|
  bool full_schmidt_rank = false;
};

/// Top eigenvector of a strictly reflection positive density matrix;
/// asserts the cone-interior rendering of the Krein-Rutman conclusion.
PerronFrobeniusReport perron_frobenius_check(const QuantumState& rho,
                                             const ReflectionFrame& rf);

/// Mixture of interior cone vectors (M = G^dag G/tr + 0.1*I, normalized);
/// strictly RP by the cone calculus.
QuantumState random_strict_rp_density(std::mt19937_64& rng,
                                      const ReflectionFrame& rf,
                                      int n_vectors = 3);

/// Random J-invariant U-eigenvector with eigenvalue e^{2 pi i q / N};
/// q != 0 mod N produces the momentum-twisted vectors forbidden from
/// being RP.
QuantumState random_twisted_eigenvector(std::mt19937_64& rng,
                                        const RotationFrame& rot,
                                        const ReflectionFrame& rf, int q);

}  // namespace rpchain
