#pragma once

#include "rpchain/models.hpp"

namespace rpchain {

/// Majorana operator c_{2j-1} = Z_1..Z_{j-1} X_j or
/// c_{2j} = Z_1..Z_{j-1} Y_j on a qubit chain (1-based a in 1..4N).
DenseOperator jordan_wigner(int a, const ChainFrame& frame);

/// Two-point data of the TFIM ground state: <c_j c_k> = delta_{jk} + B_{jk}
/// with B purely imaginary off-diagonal. Stored as the real antisymmetric
/// matrix m = -iB; the complex B is recovered as i*m.
struct MajoranaCovariance {
  RealMat m;  // 4N x 4N, real antisymmetric

  Mat b() const { return Complex(0, 1) * m.cast<Complex>(); }
  /// Quasi-free purity criterion m^2 = -1.
  double purity_defect() const {
    return (m * m + RealMat::Identity(m.rows(), m.cols()))
        .cwiseAbs()
        .maxCoeff();
  }
};

/// Closed-form covariance B_{jk} = i(1-(-1)^{k-j}) / (4N sin(pi(k-j)/4N)).
MajoranaCovariance covariance_formula(int n_half);

struct CovarianceCheck {
  MajoranaCovariance cov;
  double max_dev = 0.0;          // vs covariance_formula
  std::string sector;            // "periodic" or "antiperiodic"
};

/// Exact-diagonalization oracle: computes <Omega| c_j c_k |Omega> on the
/// TFIM ground state. Both boundary-sector conventions are evaluated and
/// the one matching the formula is selected and reported.
CovarianceCheck covariance_from_ground_state(int n_half);

/// A_{jk} = -i B_{j, 4N+1-k}, j,k = 1..2N; Hermitian and positive definite.
struct AMatrixReport {
  Mat a;
  double min_eig = 0.0;
  double herm_defect = 0.0;
};

AMatrixReport a_matrix_pd(int n_half);

}  // namespace rpchain
