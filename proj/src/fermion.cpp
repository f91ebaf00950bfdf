#include "rpchain/fermion.hpp"

#include <cmath>

namespace rpchain {

DenseOperator jordan_wigner(int a, const ChainFrame& frame) {
  if (frame.local_dim != 2)
    throw std::invalid_argument("jordan_wigner: requires d = 2");
  const int n = frame.sites();
  if (a < 1 || a > 2 * n)
    throw std::invalid_argument("jordan_wigner: index out of range");
  const int j = (a + 1) / 2;
  std::map<int, char> labels;
  for (int s = 1; s < j; ++s) labels[s] = 'Z';
  labels[j] = (a % 2 == 1) ? 'X' : 'Y';
  return assemble({PauliString::from_labels(1.0, labels)}, frame);
}

MajoranaCovariance covariance_formula(int n_half) {
  if (n_half < 1) throw std::invalid_argument("covariance_formula: N >= 1");
  const int m4 = 4 * n_half;
  MajoranaCovariance cov;
  cov.m = RealMat::Zero(m4, m4);
  for (int j = 1; j <= m4; ++j) {
    for (int k = 1; k <= m4; ++k) {
      if (((k - j) % 2 + 2) % 2 == 0) continue;  // even separation vanishes
      // B_{jk} = i * 2 / (4N sin(pi(k-j)/4N)); m = -iB.
      cov.m(j - 1, k - 1) =
          2.0 / (m4 * std::sin(M_PI * static_cast<double>(k - j) / m4));
    }
  }
  return cov;
}

namespace {

RealMat covariance_of_state(const QuantumState& gs, const ChainFrame& frame) {
  const int m4 = 2 * frame.sites();
  std::vector<Mat> c;
  c.reserve(m4);
  for (int a = 1; a <= m4; ++a)
    c.push_back(jordan_wigner(a, frame).matrix);
  std::vector<Vec> cv(m4);
  for (int a = 0; a < m4; ++a) cv[a] = c[a] * gs.vector;
  RealMat m = RealMat::Zero(m4, m4);
  for (int j = 0; j < m4; ++j) {
    for (int k = j + 1; k < m4; ++k) {
      // <c_j c_k> = delta + B; c_j Hermitian so <c_j c_k> = <c_j gs, c_k gs>.
      Complex v = cv[j].dot(cv[k]);
      m(j, k) = v.imag();  // m = -iB with B = <c_j c_k>, purely imaginary
      m(k, j) = -v.imag();
    }
  }
  return m;
}

DenseOperator tfim_boundary_flipped(int n_sites) {
  ChainFrame frame(n_sites / 2, 2);
  std::vector<PauliString> terms;
  for (int i = 1; i < n_sites; ++i)
    terms.push_back(PauliString::from_labels(-1.0, {{i, 'X'}, {i + 1, 'X'}}));
  terms.push_back(PauliString::from_labels(+1.0, {{n_sites, 'X'}, {1, 'X'}}));
  for (int i = 1; i <= n_sites; ++i)
    terms.push_back(PauliString::from_labels(-1.0, {{i, 'Z'}}));
  return assemble(terms, frame);
}

}  // namespace

CovarianceCheck covariance_from_ground_state(int n_half) {
  if (n_half < 1 || n_half > 5)
    throw std::invalid_argument(
        "covariance_from_ground_state: 2 <= 2N <= 10 required");
  const ChainFrame frame(n_half, 2);
  const RealMat ref = covariance_formula(n_half).m;

  CovarianceCheck best;
  best.max_dev = -1.0;
  for (const char* sector : {"periodic", "antiperiodic"}) {
    DenseOperator h = sector == std::string("periodic")
                          ? tfim_hamiltonian(2 * n_half)
                          : tfim_boundary_flipped(2 * n_half);
    GroundState gs = ground_state_of(h);
    RealMat m = covariance_of_state(gs.state, frame);
    double dev = (m - ref).cwiseAbs().maxCoeff();
    if (best.max_dev < 0 || dev < best.max_dev) {
      best.cov.m = std::move(m);
      best.max_dev = dev;
      best.sector = sector;
    }
  }
  if (best.max_dev > 1e-9)
    throw std::runtime_error(
        "covariance_from_ground_state: mismatch in both sector conventions");
  return best;
}

AMatrixReport a_matrix_pd(int n_half) {
  const int n2 = 2 * n_half, m4 = 4 * n_half;
  const Mat b = covariance_formula(n_half).b();
  AMatrixReport rep;
  rep.a.resize(n2, n2);
  for (int j = 1; j <= n2; ++j)
    for (int k = 1; k <= n2; ++k)
      rep.a(j - 1, k - 1) = Complex(0, -1) * b(j - 1, m4 + 1 - k - 1);
  rep.herm_defect = herm_defect(rep.a);
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (rep.a + rep.a.adjoint()),
                                        Eigen::EigenvaluesOnly);
  rep.min_eig = es.eigenvalues().minCoeff();
  return rep;
}

}  // namespace rpchain
