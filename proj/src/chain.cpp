#include "rpchain/chain.hpp"

#include <unsupported/Eigen/KroneckerProduct>

namespace rpchain {

Mat pauli_x() {
  Mat m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Mat pauli_y() {
  Mat m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

Mat pauli_z() {
  Mat m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

Mat pauli_letter(char c) {
  switch (c) {
    case 'X': return pauli_x();
    case 'Y': return pauli_y();
    case 'Z': return pauli_z();
    case 'I': return Mat::Identity(2, 2);
    default:
      throw std::invalid_argument(std::string("unknown Pauli letter: ") + c);
  }
}

PauliString PauliString::from_labels(Complex c,
                                     const std::map<int, char>& labels) {
  PauliString s;
  s.coeff = c;
  for (auto [site, letter] : labels) s.letters[site] = pauli_letter(letter);
  return s;
}

DenseOperator::DenseOperator(Mat m, Subsystem s, const ChainFrame& f,
                             double herm_tol)
    : matrix(std::move(m)), subsystem(s), frame(f) {
  const Index want = subsystem_dim(f, s);
  if (matrix.rows() != want || matrix.cols() != want)
    throw std::invalid_argument("DenseOperator: matrix dimension mismatch");
  hermitian = herm_defect(matrix) <= herm_tol;
}

QuantumState QuantumState::pure(Vec v, const ChainFrame& f, Subsystem s) {
  if (v.size() != subsystem_dim(f, s))
    throw std::invalid_argument("QuantumState: vector dimension mismatch");
  if (std::abs(v.norm() - 1.0) > 1e-12)
    throw std::invalid_argument("QuantumState: vector is not normalized");
  QuantumState st;
  st.kind = StateKind::vector;
  st.vector = std::move(v);
  st.subsystem = s;
  st.frame = f;
  return st;
}

QuantumState QuantumState::mixed(Mat rho, const ChainFrame& f, Subsystem s) {
  if (rho.rows() != subsystem_dim(f, s) || rho.cols() != rho.rows())
    throw std::invalid_argument("QuantumState: density dimension mismatch");
  if (herm_defect(rho) > 1e-12)
    throw std::invalid_argument("QuantumState: density matrix not Hermitian");
  if (std::abs(rho.trace().real() - 1.0) > 1e-12 ||
      std::abs(rho.trace().imag()) > 1e-12)
    throw std::invalid_argument("QuantumState: density matrix trace != 1");
  Eigen::SelfAdjointEigenSolver<Mat> es(rho, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-10)
    throw std::invalid_argument("QuantumState: density matrix not PSD");
  QuantumState st;
  st.kind = StateKind::density;
  st.density = std::move(rho);
  st.subsystem = s;
  st.frame = f;
  return st;
}

Mat QuantumState::as_density() const {
  if (kind == StateKind::density) return density;
  return vector * vector.adjoint();
}

int digit_of(Index idx, int site, int n_sites, int d) {
  Index div = ChainFrame::ipow(d, n_sites - site);
  return static_cast<int>((idx / div) % d);
}

Index reversed_index(Index idx, int n_sites, int d) {
  Index out = 0;
  for (int s = 1; s <= n_sites; ++s) {
    out = out * d + digit_of(idx, n_sites + 1 - s, n_sites, d);
  }
  return out;
}

Perm reversal_perm(int n_sites, int d) {
  const Index dim = ChainFrame::ipow(d, n_sites);
  Perm p(dim);
  for (Index m = 0; m < dim; ++m) p[m] = reversed_index(m, n_sites, d);
  return p;
}

DenseOperator assemble(const std::vector<PauliString>& terms,
                       const ChainFrame& frame, Subsystem sub) {
  const int n = subsystem_sites(frame, sub);
  const int d = frame.local_dim;
  const Index dim = subsystem_dim(frame, sub);
  Mat result = Mat::Zero(dim, dim);
  const Mat id = Mat::Identity(d, d);
  for (const auto& term : terms) {
    for (auto& [site, letter] : term.letters) {
      if (site < 1 || site > n)
        throw std::invalid_argument("assemble: site index out of range");
      if (letter.rows() != d || letter.cols() != d)
        throw std::invalid_argument("assemble: letter/dimension mismatch");
    }
    Mat acc = Mat::Identity(1, 1);
    for (int site = 1; site <= n; ++site) {
      auto it = term.letters.find(site);
      const Mat& factor = (it == term.letters.end()) ? id : it->second;
      acc = Eigen::kroneckerProduct(acc, factor).eval();
    }
    result += term.coeff * acc;
  }
  return DenseOperator(std::move(result), sub, frame);
}

Mat partial_trace_sites(const QuantumState& state,
                        const std::vector<int>& keep_sites) {
  if (state.subsystem != Subsystem::full)
    throw std::invalid_argument("partial_trace: state must be full-system");
  const int n = state.frame.sites();
  const int d = state.frame.local_dim;
  std::vector<bool> keep(n + 1, false);
  for (int s : keep_sites) {
    if (s < 1 || s > n)
      throw std::invalid_argument("partial_trace: site out of range");
    keep[s] = true;
  }
  const int nk = static_cast<int>(keep_sites.size());
  const Index dk = ChainFrame::ipow(d, nk);
  const Index de = ChainFrame::ipow(d, n - nk);

  // Map full index -> (kept index, traced index), both big-endian in the
  // original site order.
  const Index dim = state.frame.dim_full();
  std::vector<Index> ik(dim), ie(dim);
  for (Index m = 0; m < dim; ++m) {
    Index a = 0, b = 0;
    for (int s = 1; s <= n; ++s) {
      int dig = digit_of(m, s, n, d);
      if (keep[s]) a = a * d + dig;
      else b = b * d + dig;
    }
    ik[m] = a;
    ie[m] = b;
  }

  Mat out = Mat::Zero(dk, dk);
  if (state.kind == StateKind::vector) {
    // out = M M^dag with M_{a,b} = psi_m
    Mat M = Mat::Zero(dk, de);
    for (Index m = 0; m < dim; ++m) M(ik[m], ie[m]) = state.vector(m);
    out = M * M.adjoint();
  } else {
    std::vector<std::vector<Index>> by_env(de);
    for (Index m = 0; m < dim; ++m) by_env[ie[m]].push_back(m);
    for (Index b = 0; b < de; ++b) {
      for (Index m : by_env[b])
        for (Index mp : by_env[b])
          out(ik[m], ik[mp]) += state.density(m, mp);
    }
  }
  return out;
}

QuantumState partial_trace(const QuantumState& state, Subsystem keep) {
  if (keep == Subsystem::full)
    throw std::invalid_argument("partial_trace: keep must be left or right");
  const int N = state.frame.n_half;
  std::vector<int> sites;
  const int lo = keep == Subsystem::left ? 1 : N + 1;
  for (int s = lo; s < lo + N; ++s) sites.push_back(s);
  Mat rho = partial_trace_sites(state, sites);
  // Renormalize away the accumulated roundoff; trace is preserved to 1e-12.
  rho /= rho.trace().real();
  return QuantumState::mixed(std::move(rho), state.frame, keep);
}

Complex expectation(const QuantumState& state, const Mat& op) {
  if (op.rows() != state.dim())
    throw std::invalid_argument("expectation: dimension mismatch");
  if (state.kind == StateKind::vector)
    return state.vector.dot(op * state.vector);
  return (state.density * op).trace();
}

Complex expectation(const QuantumState& state, const DenseOperator& op) {
  return expectation(state, op.matrix);
}

}  // namespace rpchain
