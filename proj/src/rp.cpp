#include "rpchain/rp.hpp"

namespace rpchain {

std::string to_string(RpVerdict v) {
  switch (v) {
    case RpVerdict::strictly_rp: return "strictly_rp";
    case RpVerdict::rp: return "rp";
    case RpVerdict::not_rp: return "not_rp";
    case RpVerdict::not_j_invariant: return "not_j_invariant";
  }
  return "?";
}

std::string to_string(ConeVerdict v) {
  switch (v) {
    case ConeVerdict::inside: return "inside";
    case ConeVerdict::boundary: return "boundary";
    case ConeVerdict::outside: return "outside";
  }
  return "?";
}

Mat gram_matrix(const Mat& rho, const ReflectionFrame& rf) {
  const Index dh = rf.frame.dim_half();
  if (rho.rows() != dh * dh)
    throw std::invalid_argument("gram_matrix: dimension mismatch");
  const Perm& rev = rf.half_reversal;
  Mat G(dh * dh, dh * dh);
  for (Index k = 0; k < dh; ++k)
    for (Index l = 0; l < dh; ++l)
      for (Index i = 0; i < dh; ++i)
        for (Index j = 0; j < dh; ++j)
          G(k * dh + l, i * dh + j) = rho(j * dh + rev[l], i * dh + rev[k]);
  return G;
}

Mat realignment(const Mat& a, const ReflectionFrame& rf) {
  const Index dh = rf.frame.dim_half();
  if (a.rows() != dh * dh)
    throw std::invalid_argument("realignment: dimension mismatch");
  const Perm& rev = rf.half_reversal;
  Mat L(dh * dh, dh * dh);
  for (Index i = 0; i < dh; ++i)
    for (Index j = 0; j < dh; ++j)
      for (Index k = 0; k < dh; ++k)
        for (Index l = 0; l < dh; ++l)
          L(i * dh + j, k * dh + l) = a(i * dh + rev[k], j * dh + rev[l]);
  return L;
}

RpCertificate check_rp(const QuantumState& state, const ReflectionFrame& rf,
                       const Tolerances& tol) {
  if (state.subsystem != Subsystem::full)
    throw std::invalid_argument("check_rp: state must be full-system");
  const Mat rho = state.as_density();
  if (std::abs(rho.trace().real() - 1.0) > 1e-10)
    throw std::invalid_argument("check_rp: input has trace != 1");

  RpCertificate cert;
  cert.gram_dim = rho.rows();

  const Mat jrho = conjugate_operator_by_J(rho, rf);
  {
    // rho and j(rho) are both Hermitian, so the difference is too.
    Mat diff = rho - jrho;
    Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (diff + diff.adjoint()),
                                          Eigen::EigenvaluesOnly);
    cert.j_invariance_defect = es.eigenvalues().cwiseAbs().maxCoeff();
  }

  {
    QuantumState full = state;
    Mat rl = partial_trace(full, Subsystem::left).density;
    Eigen::SelfAdjointEigenSolver<Mat> es(rl, Eigen::EigenvaluesOnly);
    cert.reduced_rank =
        static_cast<int>((es.eigenvalues().array() > 1e-10).count());
  }

  if (cert.j_invariance_defect > tol.j_invariance) {
    cert.verdict = RpVerdict::not_j_invariant;
    return cert;
  }

  Mat G = gram_matrix(rho, rf);
  cert.gram_herm_defect = herm_defect(G);
  Mat H = 0.5 * (G + G.adjoint());
  Eigen::SelfAdjointEigenSolver<Mat> es(H);
  cert.gram_min_eig = es.eigenvalues().minCoeff();

  const double threshold = tol.psd_slack * static_cast<double>(cert.gram_dim);
  if (cert.gram_min_eig > threshold) {
    cert.verdict = RpVerdict::strictly_rp;
  } else if (cert.gram_min_eig >= -threshold) {
    cert.verdict = RpVerdict::rp;
  } else {
    cert.verdict = RpVerdict::not_rp;
    const Index dh = rf.frame.dim_half();
    Index argmin = 0;
    es.eigenvalues().minCoeff(&argmin);
    Vec w = es.eigenvectors().col(argmin);
    Mat x(dh, dh);
    for (Index i = 0; i < dh; ++i)
      for (Index j = 0; j < dh; ++j) x(i, j) = w(i * dh + j);
    cert.witness = std::move(x);
  }
  return cert;
}

ConeReport cone_membership(const DenseOperator& a, const ReflectionFrame& rf,
                           const Tolerances& tol) {
  if (a.subsystem != Subsystem::full)
    throw std::invalid_argument("cone_membership: operator must be full-system");
  Mat L = realignment(a.matrix, rf);
  ConeReport rep;
  rep.herm_defect = herm_defect(L);
  Mat H = 0.5 * (L + L.adjoint());
  Eigen::SelfAdjointEigenSolver<Mat> es(H, Eigen::EigenvaluesOnly);
  rep.min_eig = es.eigenvalues().minCoeff();
  const double threshold = tol.psd_slack * static_cast<double>(L.rows());
  if (rep.herm_defect > tol.hermitian * static_cast<double>(L.rows()) * 10 ||
      rep.min_eig < -threshold) {
    rep.verdict = ConeVerdict::outside;
  } else if (rep.min_eig <= threshold) {
    rep.verdict = ConeVerdict::boundary;
  } else {
    rep.verdict = ConeVerdict::inside;
  }
  return rep;
}

bool strict_rp_test_observable(const DenseOperator& a,
                               const ReflectionFrame& rf,
                               const Tolerances& tol) {
  ConeReport rep = cone_membership(a, rf, tol);
  if (rep.verdict == ConeVerdict::outside)
    throw std::invalid_argument("strict_rp_test_observable: a not in K+");
  return rep.verdict == ConeVerdict::inside;
}

QuantumState perturb_state(const QuantumState& omega, const DenseOperator& a,
                           const ReflectionFrame& rf, const Tolerances& tol) {
  if (omega.kind != StateKind::vector)
    throw std::invalid_argument("perturb_state: omega must be pure");
  RpCertificate cert = check_rp(omega, rf, tol);
  if (!cert.passing())
    throw std::invalid_argument("perturb_state: omega is not reflection positive");
  if (!strict_rp_test_observable(a, rf, tol))
    throw std::invalid_argument("perturb_state: a is not strictly RP");
  Vec v = a.matrix * omega.vector;
  const double n = v.norm();  // sqrt of omega(a* a)
  if (n * n <= tol.psd_slack)
    throw std::invalid_argument("perturb_state: omega(a* a) below tolerance");
  v /= n;
  return QuantumState::pure(std::move(v), omega.frame);
}

}  // namespace rpchain
