#include "rpchain/rotation.hpp"

#include <unsupported/Eigen/KroneckerProduct>

namespace rpchain {

AngularMomentumReport angular_momentum(const QuantumState& psi,
                                       const RotationFrame& rot,
                                       const ReflectionFrame& rf) {
  if (psi.kind != StateKind::vector || psi.subsystem != Subsystem::full)
    throw std::invalid_argument("angular_momentum: expected full-system vector");
  AngularMomentumReport rep;
  Vec u = rotate(psi.vector, rot, 1);
  rep.eigenvalue = psi.vector.dot(u);
  rep.is_invariant = (u - rep.eigenvalue * psi.vector).norm() < 1e-10;
  rep.rp_verdict = check_rp(psi, rf);
  if (rep.rp_verdict.passing() && rep.is_invariant)
    rep.proposition_holds = std::abs(rep.eigenvalue - Complex(1.0)) < 1e-9;
  return rep;
}

namespace {

/// Basis permutation from chain-major (k stacked qubit chains of length
/// n_sites) to site-major ((2^k)-dim sites, digit c of site s = qubit s
/// of chain c).
Perm stacked_perm(int n_sites, int k) {
  const int nq = n_sites * k;
  const Index dim = Index(1) << nq;
  Perm p(dim);
  for (Index m = 0; m < dim; ++m) {
    Index site_major = 0;
    for (int s = 0; s < n_sites; ++s)
      for (int c = 0; c < k; ++c) {
        const int bitpos = nq - 1 - (c * n_sites + s);
        site_major = (site_major << 1) | ((m >> bitpos) & 1);
      }
    p[m] = site_major;
  }
  return p;
}

}  // namespace

DenseOperator build_srp_invariant_observable(int d, int n_half) {
  if (d < 2) throw std::invalid_argument("build_srp_invariant_observable: d >= 2");
  int k = 0;
  while ((1 << k) < d) ++k;
  const int n = 2 * n_half;
  if (n * k > 20)
    throw std::invalid_argument(
        "build_srp_invariant_observable: 2N*ceil(log2 d) too large");

  Vec gs = tfim_ground_state(n_half).state.vector;
  Vec stacked = gs;
  for (int c = 1; c < k; ++c)
    stacked = Eigen::kroneckerProduct(stacked, gs).eval();
  Perm perm = stacked_perm(n, k);
  Vec site_major(stacked.size());
  for (Index m = 0; m < stacked.size(); ++m) site_major(perm[m]) = stacked(m);

  const int dk = 1 << k;
  ChainFrame frame(n_half, d);
  Vec psi;
  if (d == dk) {
    psi = std::move(site_major);
  } else {
    // Compress each site from 2^k to d levels (keep the lowest d basis
    // states), i.e. apply p^{(x)2N} and renormalize.
    const Index dim = frame.dim_full();
    psi = Vec::Zero(dim);
    for (Index m = 0; m < dim; ++m) {
      Index src = 0;
      for (int s = 1; s <= n; ++s)
        src = src * dk + digit_of(m, s, n, d);
      psi(m) = site_major(src);
    }
    const double norm = psi.norm();
    if (norm < 1e-12)
      throw std::runtime_error(
          "build_srp_invariant_observable: compression annihilated the state");
    psi /= norm;
  }
  Mat proj = psi * psi.adjoint();
  DenseOperator a(std::move(proj), Subsystem::full, frame);

  ReflectionFrame rf(frame);
  if (!strict_rp_test_observable(a, rf))
    throw std::runtime_error(
        "build_srp_invariant_observable: strictness failed after compression");
  return a;
}

QuantumState strictify(const QuantumState& psi, const RotationFrame& rot,
                       const ReflectionFrame& rf) {
  AngularMomentumReport am = angular_momentum(psi, rot, rf);
  if (!am.rp_verdict.passing())
    throw std::invalid_argument("strictify: input is not reflection positive");
  if (!am.is_invariant || std::abs(am.eigenvalue - Complex(1.0)) > 1e-9)
    throw std::invalid_argument("strictify: input is not shift-invariant");
  DenseOperator a =
      build_srp_invariant_observable(rf.frame.local_dim, rf.frame.n_half);
  return perturb_state(psi, a, rf);
}

PerronFrobeniusReport perron_frobenius_check(const QuantumState& rho,
                                             const ReflectionFrame& rf) {
  if (rho.kind != StateKind::density || rho.subsystem != Subsystem::full)
    throw std::invalid_argument(
        "perron_frobenius_check: expected full-system density matrix");
  RpCertificate in_cert = check_rp(rho, rf);
  if (in_cert.verdict != RpVerdict::strictly_rp)
    throw std::invalid_argument(
        "perron_frobenius_check: input is not strictly RP");

  Eigen::SelfAdjointEigenSolver<Mat> es(rho.density);
  const Index dim = rho.density.rows();
  PerronFrobeniusReport rep;
  rep.top_eigenvalue = es.eigenvalues()(dim - 1);
  rep.top_gap = rep.top_eigenvalue - es.eigenvalues()(dim - 2);
  rep.top_degenerate = rep.top_gap < 1e-10;
  Vec xi = es.eigenvectors().col(dim - 1);
  // The eigenvector is in the natural cone up to a phase; fix it by
  // making the cone-coordinate trace real positive.
  QuantumState top = QuantumState::pure(xi, rf.frame);
  ConeCoordinates cc = cone_coordinates(top, rf);
  Complex tr = cc.matrix.trace();
  if (std::abs(tr) > 1e-12) {
    xi *= std::conj(tr) / std::abs(tr);
    top = QuantumState::pure(xi, rf.frame);
    cc = cone_coordinates(top, rf);
  }
  rep.top_eigenvector = xi;
  rep.cone = cc;
  rep.full_schmidt_rank = cc.schmidt_rank == rf.frame.dim_half();
  rep.projector_cert = check_rp(top, rf);
  return rep;
}

QuantumState random_strict_rp_density(std::mt19937_64& rng,
                                      const ReflectionFrame& rf,
                                      int n_vectors) {
  if (n_vectors < 2)
    throw std::invalid_argument("random_strict_rp_density: need >= 2 vectors");
  const Index dh = rf.frame.dim_half();
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> unif(0.1, 1.0);
  const Perm& rev = rf.half_reversal;

  Mat rho = Mat::Zero(dh * dh, dh * dh);
  double wsum = 0.0;
  for (int t = 0; t < n_vectors; ++t) {
    Mat g(dh, dh);
    for (Index i = 0; i < dh; ++i)
      for (Index j = 0; j < dh; ++j)
        g(i, j) = Complex(gauss(rng), gauss(rng));
    Mat m = g.adjoint() * g;
    m /= m.trace().real();
    m += 0.1 * Mat::Identity(dh, dh);
    Vec psi(dh * dh);
    for (Index i = 0; i < dh; ++i)
      for (Index mm = 0; mm < dh; ++mm) psi(i * dh + mm) = m(i, rev[mm]);
    psi /= psi.norm();
    const double w = unif(rng);
    rho += w * (psi * psi.adjoint());
    wsum += w;
  }
  rho /= wsum;
  rho = 0.5 * (rho + rho.adjoint().eval());
  return QuantumState::mixed(std::move(rho), rf.frame);
}

QuantumState random_twisted_eigenvector(std::mt19937_64& rng,
                                        const RotationFrame& rot,
                                        const ReflectionFrame& rf, int q) {
  const Index dim = rf.frame.dim_full();
  const int N = rf.frame.n_half;
  std::normal_distribution<double> gauss;
  for (int attempt = 0; attempt < 64; ++attempt) {
    Vec b(dim);
    for (Index m = 0; m < dim; ++m) b(m) = Complex(gauss(rng), gauss(rng));
    b = b + apply_J(b, rf);  // J-invariant seed
    if (b.norm() < 1e-8) continue;
    b /= b.norm();
    const Complex lambda =
        std::exp(Complex(0.0, 2.0 * M_PI * static_cast<double>(q) / N));
    Vec psi = Vec::Zero(dim);
    Vec cur = b;
    for (int m = 0; m < N; ++m) {
      psi += std::pow(lambda, -m) * cur;
      cur = rotate(cur, rot, 1);
    }
    if (psi.norm() < 1e-8) continue;
    psi /= psi.norm();
    return QuantumState::pure(std::move(psi), rf.frame);
  }
  throw std::runtime_error("random_twisted_eigenvector: projection kept vanishing");
}

}  // namespace rpchain
