#include "rpchain/purify.hpp"

namespace rpchain {

namespace {
constexpr double kZeroFloor = 1e-12;
constexpr double kDegenTol = 1e-10;
}  // namespace

SchmidtData schmidt(const QuantumState& rho_left) {
  if (rho_left.kind != StateKind::density ||
      rho_left.subsystem == Subsystem::full)
    throw std::invalid_argument("schmidt: expected a half-chain density matrix");
  Eigen::SelfAdjointEigenSolver<Mat> es(rho_left.density);
  const Index n = es.eigenvalues().size();
  if (es.eigenvalues().minCoeff() < -1e-10)
    throw std::invalid_argument("schmidt: negative eigenvalue below -1e-10");

  SchmidtData sd;
  sd.values.resize(n);
  sd.left_vectors.resize(n, n);
  for (Index i = 0; i < n; ++i) {  // flip to descending order
    double v = es.eigenvalues()(n - 1 - i);
    sd.values[i] = v < kZeroFloor ? 0.0 : v;
    sd.left_vectors.col(i) = es.eigenvectors().col(n - 1 - i);
  }
  for (Index i = 0; i < n; ++i) {
    if (!sd.degeneracy_blocks.empty() &&
        sd.values[sd.degeneracy_blocks.back().back()] - sd.values[i] <
            kDegenTol) {
      sd.degeneracy_blocks.back().push_back(static_cast<int>(i));
    } else {
      sd.degeneracy_blocks.push_back({static_cast<int>(i)});
    }
  }
  return sd;
}

Vec purification_vector(const SchmidtData& sd,
                        const std::vector<double>& phases,
                        const ReflectionFrame& rf) {
  const Index dh = rf.frame.dim_half();
  if (sd.left_vectors.rows() != dh)
    throw std::invalid_argument("purification_vector: frame mismatch");
  if (phases.size() != sd.values.size())
    throw std::invalid_argument("purification_vector: phase count mismatch");
  Vec psi = Vec::Zero(dh * dh);
  const Perm& rev = rf.half_reversal;
  for (size_t a = 0; a < sd.values.size(); ++a) {
    if (sd.values[a] == 0.0) continue;
    const Complex ph =
        std::sqrt(sd.values[a]) * std::exp(Complex(0.0, phases[a]));
    const auto xi = sd.left_vectors.col(static_cast<Index>(a));
    // Right factor is the reflect-conjugate of xi: component m holds
    // conj(xi[sigma(m)]).
    for (Index i = 0; i < dh; ++i) {
      if (xi(i) == Complex(0, 0)) continue;
      for (Index m = 0; m < dh; ++m)
        psi(i * dh + m) += ph * xi(i) * std::conj(xi(rev[m]));
    }
  }
  return psi;
}

QuantumState canonical_purification(const QuantumState& rho_left,
                                    const ReflectionFrame& rf) {
  SchmidtData sd = schmidt(rho_left);
  std::vector<double> zero(sd.values.size(), 0.0);
  Vec psi = purification_vector(sd, zero, rf);
  psi /= psi.norm();
  return QuantumState::pure(std::move(psi), rf.frame);
}

ConeCoordinates cone_coordinates(const QuantumState& psi,
                                 const ReflectionFrame& rf) {
  if (psi.kind != StateKind::vector || psi.subsystem != Subsystem::full)
    throw std::invalid_argument("cone_coordinates: expected full-system vector");
  const Index dh = rf.frame.dim_half();
  ConeCoordinates cc;
  cc.matrix.resize(dh, dh);
  const Perm& rev = rf.half_reversal;
  for (Index i = 0; i < dh; ++i)
    for (Index k = 0; k < dh; ++k)
      cc.matrix(i, k) = psi.vector(i * dh + rev[k]);
  cc.herm_defect = herm_defect(cc.matrix);
  Mat herm = 0.5 * (cc.matrix + cc.matrix.adjoint());
  Eigen::SelfAdjointEigenSolver<Mat> es(herm, Eigen::EigenvaluesOnly);
  cc.min_eigenvalue = es.eigenvalues().minCoeff();
  Eigen::JacobiSVD<Mat> svd(cc.matrix);
  cc.schmidt_rank = static_cast<int>(
      (svd.singularValues().array() > 1e-10).count());
  return cc;
}

UniquenessReport uniqueness_oracle(const QuantumState& rho_left,
                                   const ReflectionFrame& rf, int grid) {
  if (grid < 2) throw std::invalid_argument("uniqueness_oracle: grid < 2");
  SchmidtData sd = schmidt(rho_left);
  for (const auto& blk : sd.degeneracy_blocks)
    if (blk.size() > 1)
      throw std::invalid_argument(
          "uniqueness_oracle: degenerate spectrum (gap below 1e-8)");
  for (size_t i = 0; i + 1 < sd.values.size(); ++i)
    if (sd.values[i] - sd.values[i + 1] < 1e-8)
      throw std::invalid_argument(
          "uniqueness_oracle: degenerate spectrum (gap below 1e-8)");

  const int r = static_cast<int>(sd.values.size());
  UniquenessReport rep;
  rep.grid = grid;
  std::vector<int> idx(r, 0);
  std::vector<double> phases(r, 0.0);
  const double step = 2.0 * M_PI / grid;
  bool done = false;
  while (!done) {
    bool all_zero = true;
    for (int a = 0; a < r; ++a) {
      phases[a] = step * idx[a];
      if (idx[a] != 0) all_zero = false;
    }
    Vec psi = purification_vector(sd, phases, rf);
    psi /= psi.norm();
    QuantumState st = QuantumState::pure(std::move(psi), rf.frame);
    ConeCoordinates cc = cone_coordinates(st, rf);
    const double tol = 1e-9;
    const bool pass = cc.herm_defect <= tol && cc.min_eigenvalue >= -tol;
    rep.total++;
    if (pass) {
      rep.passed++;
      if (all_zero) rep.zero_phase_passed = true;
    }
    // odometer over the phase grid
    done = true;
    for (int a = r - 1; a >= 0; --a) {
      if (++idx[a] < grid) { done = false; break; }
      idx[a] = 0;
    }
  }
  rep.only_zero_phase = rep.zero_phase_passed && rep.passed == 1;
  return rep;
}

}  // namespace rpchain
