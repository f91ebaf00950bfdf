#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace rpchain {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RealMat = Eigen::MatrixXd;
using Index = Eigen::Index;
using Perm = std::vector<Index>;

/// Global numerical tolerances. Defaults follow the library-wide
/// convention: 1e-12 for Hermiticity/unitarity, 1e-10 of PSD slack.
struct Tolerances {
  double hermitian = 1e-12;
  double psd_slack = 1e-10;
  double j_invariance = 1e-10;
};

inline double herm_defect(const Mat& a) {
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace rpchain
