#pragma once

#include <optional>
#include <string>

#include "rpchain/purify.hpp"
#include "rpchain/symmetry.hpp"

namespace rpchain {

enum class RpVerdict { strictly_rp, rp, not_rp, not_j_invariant };

std::string to_string(RpVerdict v);

struct RpCertificate {
  RpVerdict verdict = RpVerdict::not_rp;
  double gram_min_eig = 0.0;
  Index gram_dim = 0;
  double j_invariance_defect = 0.0;
  double gram_herm_defect = 0.0;
  int reduced_rank = 0;            // rank of the left restriction
  std::optional<Mat> witness;      // left operator attaining gram_min_eig

  bool passing() const {
    return verdict == RpVerdict::rp || verdict == RpVerdict::strictly_rp;
  }
};

/// Hermitian form G on left operators with vec(x)^dag G vec(x)
/// = Tr(rho x (x) JxJ); a pure entry reshuffle of rho.
Mat gram_matrix(const Mat& rho, const ReflectionFrame& rf);

/// Realignment Lambda(a)_{(i,j),(sigma r, sigma s)} = a_{(i,r),(j,s)};
/// a is a reflection positive observable iff Lambda(a) is PSD.
Mat realignment(const Mat& a, const ReflectionFrame& rf);

/// Classifies a state by the minimal Gram eigenvalue. j-invariance is
/// checked first: the Gram matrix is only Hermitian for j-invariant
/// states, and diagonalizing a non-Hermitian Gram silently is a
/// correctness trap.
RpCertificate check_rp(const QuantumState& state, const ReflectionFrame& rf,
                       const Tolerances& tol = {});

enum class ConeVerdict { inside, boundary, outside };

std::string to_string(ConeVerdict v);

struct ConeReport {
  ConeVerdict verdict = ConeVerdict::outside;
  double min_eig = 0.0;         // of the Hermitian part of Lambda(a)
  double herm_defect = 0.0;     // of Lambda(a)
};

/// Membership in the cone K+ of reflection positive observables.
ConeReport cone_membership(const DenseOperator& a, const ReflectionFrame& rf,
                           const Tolerances& tol = {});

/// True iff Lambda(a) is positive definite; requires a in K+.
bool strict_rp_test_observable(const DenseOperator& a,
                               const ReflectionFrame& rf,
                               const Tolerances& tol = {});

/// omega_a(b) = omega(a* b a)/omega(a* a): returns the normalized
/// vector a Omega. Preconditions (a strictly RP, omega RP) are checked.
QuantumState perturb_state(const QuantumState& omega, const DenseOperator& a,
                           const ReflectionFrame& rf,
                           const Tolerances& tol = {});

}  // namespace rpchain
