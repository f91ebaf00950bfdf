#include "rpchain/models.hpp"

#include <unsupported/Eigen/KroneckerProduct>

namespace rpchain {

namespace {

PauliString stabilizer(int i, int n) {
  const int prev = (i - 2 + n) % n + 1;
  const int next = i % n + 1;
  return PauliString::from_labels(1.0, {{prev, 'Z'}, {i, 'X'}, {next, 'Z'}});
}

}  // namespace

QuantumState build_cluster_state(int n_half) {
  if (n_half < 2) throw std::invalid_argument("build_cluster_state: N >= 2");
  ChainFrame frame(n_half, 2);
  const int n = frame.sites();
  const Index dim = frame.dim_full();
  // +1 X-product vector, then project onto the joint +1 stabilizer
  // eigenspace (the stabilizers commute).
  Vec w = Vec::Constant(dim, 1.0 / std::sqrt(static_cast<double>(dim)));
  for (int i = 1; i <= n; ++i) {
    Mat s = assemble({stabilizer(i, n)}, frame).matrix;
    w = 0.5 * (w + s * w);
  }
  w /= w.norm();
  return QuantumState::pure(std::move(w), frame);
}

ClusterDemoReport cluster_purification_demo(int n_half) {
  ClusterDemoReport rep;
  rep.n_half = n_half;
  QuantumState w = build_cluster_state(n_half);

  std::vector<int> odd_sites;
  for (int i = 1; i <= 2 * n_half; i += 2) odd_sites.push_back(i);
  Mat rho = partial_trace_sites(w, odd_sites);

  // target 2^{-N} (1 + X^{(x)N}); the odd sublattice becomes the left
  // half of a 2N-site purification chain.
  ChainFrame half(n_half, 2);
  std::map<int, char> xs;
  for (int i = 1; i <= n_half; ++i) xs[i] = 'X';
  Mat target = assemble({PauliString::from_labels(1.0, {}),
                         PauliString::from_labels(1.0, xs)},
                        half, Subsystem::left)
                   .matrix /
               static_cast<double>(half.dim_half());
  Eigen::SelfAdjointEigenSolver<Mat> dev(rho - target, Eigen::EigenvaluesOnly);
  rep.reduced_state_dev = dev.eigenvalues().cwiseAbs().maxCoeff();

  rho /= rho.trace().real();
  ReflectionFrame rf(half);
  QuantumState rho_left =
      QuantumState::mixed(std::move(rho), half, Subsystem::left);
  QuantumState psi = canonical_purification(rho_left, rf);
  rep.purified_cert = check_rp(psi, rf);

  const int N = n_half, n = 2 * n_half;
  auto corr = [&](const std::map<int, char>& labels) {
    return expectation(psi, assemble({PauliString::from_labels(1.0, labels)},
                                     half, Subsystem::full))
        .real();
  };
  rep.zzzz = corr({{1, 'Z'}, {n, 'Z'}, {N, 'Z'}, {N + 1, 'Z'}});
  rep.zz_outer = corr({{1, 'Z'}, {n, 'Z'}});
  rep.zz_inner = corr({{N, 'Z'}, {N + 1, 'Z'}});
  return rep;
}

DenseOperator tfim_hamiltonian(int n_sites, bool periodic) {
  if (n_sites < 2 || n_sites % 2 != 0)
    throw std::invalid_argument("tfim_hamiltonian: even n_sites >= 2 required");
  ChainFrame frame(n_sites / 2, 2);
  std::vector<PauliString> terms;
  const int last = periodic ? n_sites : n_sites - 1;
  for (int i = 1; i <= last; ++i) {
    const int j = i % n_sites + 1;
    terms.push_back(PauliString::from_labels(-1.0, {{i, 'X'}, {j, 'X'}}));
  }
  for (int i = 1; i <= n_sites; ++i)
    terms.push_back(PauliString::from_labels(-1.0, {{i, 'Z'}}));
  return assemble(terms, frame);
}

GroundState ground_state_of(const DenseOperator& h, double gap_floor) {
  Eigen::SelfAdjointEigenSolver<Mat> es(h.matrix);
  GroundState gs{
      QuantumState::pure(es.eigenvectors().col(0), h.frame, h.subsystem),
      es.eigenvalues()(0), es.eigenvalues()(1) - es.eigenvalues()(0)};
  if (gs.gap < gap_floor)
    throw std::runtime_error("ground_state_of: degenerate ground space");
  return gs;
}

GroundState tfim_ground_state(int n_half) {
  if (n_half < 1 || n_half > 6)
    throw std::invalid_argument("tfim_ground_state: 2 <= 2N <= 12 required");
  return ground_state_of(tfim_hamiltonian(2 * n_half));
}

DenseOperator GibbsDecomposition::hamiltonian(const ReflectionFrame& rf) const {
  const ChainFrame& f = rf.frame;
  const Index dh = f.dim_half();
  DenseOperator h_right = conjugate_by_J(h_left, rf);
  Mat full = Eigen::kroneckerProduct(h_left.matrix, Mat::Identity(dh, dh));
  full += Eigen::kroneckerProduct(Mat::Identity(dh, dh), h_right.matrix);
  full += h_zero.matrix;
  return DenseOperator(std::move(full), Subsystem::full, f);
}

Mat gibbs_density(const DenseOperator& h, double beta) {
  if (!h.hermitian)
    throw std::invalid_argument("gibbs_density: Hamiltonian not Hermitian");
  Eigen::SelfAdjointEigenSolver<Mat> es(h.matrix);
  // Shift by the ground energy before exponentiating.
  Eigen::ArrayXd w = -beta * (es.eigenvalues().array() - es.eigenvalues()(0));
  Eigen::VectorXd boltz = w.exp().matrix();
  boltz /= boltz.sum();
  return es.eigenvectors() * boltz.asDiagonal() *
         es.eigenvectors().adjoint();
}

RpCertificate gibbs_rp(const GibbsDecomposition& dec,
                       const ReflectionFrame& rf) {
  DenseOperator minus_h0(-dec.h_zero.matrix, Subsystem::full, rf.frame);
  if (cone_membership(minus_h0, rf).verdict == ConeVerdict::outside)
    throw std::invalid_argument("gibbs_rp: -H0 is not in K+");
  DenseOperator h = dec.hamiltonian(rf);
  Mat rho = gibbs_density(h, dec.beta);
  return check_rp(QuantumState::mixed(std::move(rho), rf.frame), rf);
}

GroundLimitReport gibbs_ground_limit(const GibbsDecomposition& dec,
                                     const ReflectionFrame& rf) {
  DenseOperator minus_h0(-dec.h_zero.matrix, Subsystem::full, rf.frame);
  if (cone_membership(minus_h0, rf).verdict == ConeVerdict::outside)
    throw std::invalid_argument("gibbs_ground_limit: -H0 is not in K+");
  DenseOperator h = dec.hamiltonian(rf);
  Eigen::SelfAdjointEigenSolver<Mat> es(h.matrix);
  const Index dim = es.eigenvalues().size();

  GroundLimitReport rep;
  for (Index i = 0; i < dim; ++i) {
    SpectrumScanEntry entry;
    entry.energy = es.eigenvalues()(i);
    entry.in_degenerate_block =
        (i > 0 && entry.energy - es.eigenvalues()(i - 1) < 1e-8) ||
        (i + 1 < dim && es.eigenvalues()(i + 1) - entry.energy < 1e-8);
    // J maps each eigenspace to itself (H is j-invariant), so the
    // symmetrized combination is still an eigenvector.
    Vec v = es.eigenvectors().col(i);
    Vec w = v + apply_J(v, rf);
    if (w.norm() < 1e-8) w = Complex(0, 1) * (v - apply_J(v, rf));
    w /= w.norm();
    entry.cert = check_rp(QuantumState::pure(std::move(w), rf.frame), rf);
    if (entry.cert.passing()) rep.passing_count++;
    rep.entries.push_back(std::move(entry));
  }
  rep.ground_is_passing = rep.entries.front().cert.passing();
  rep.only_ground_passes = rep.ground_is_passing && rep.passing_count == 1;
  return rep;
}

GibbsDecomposition tfim_decomposition(int n_half, double beta) {
  const int N = n_half, n = 2 * n_half;
  ChainFrame frame(N, 2);
  std::vector<PauliString> left_terms;
  for (int i = 1; i < N; ++i)
    left_terms.push_back(
        PauliString::from_labels(-1.0, {{i, 'X'}, {i + 1, 'X'}}));
  for (int i = 1; i <= N; ++i)
    left_terms.push_back(PauliString::from_labels(-1.0, {{i, 'Z'}}));
  std::vector<PauliString> h0_terms = {
      PauliString::from_labels(-1.0, {{N, 'X'}, {N + 1, 'X'}}),
      PauliString::from_labels(-1.0, {{n, 'X'}, {1, 'X'}})};
  GibbsDecomposition dec{assemble(left_terms, frame, Subsystem::left),
                         assemble(h0_terms, frame, Subsystem::full), beta};
  return dec;
}

}  // namespace rpchain
