#include "rpchain/symmetry.hpp"

namespace rpchain {

RotationFrame::RotationFrame(const ChainFrame& f) : frame(f) {
  const int n = f.sites();
  const int d = f.local_dim;
  const Index dim = f.dim_full();
  shift.resize(dim);
  for (Index m = 0; m < dim; ++m) {
    // U(v_1 ... v_2N) = v_{2N-1} v_2N v_1 ... v_{2N-2}:
    // new site 1,2 take the digits of old sites 2N-1, 2N.
    Index out = 0;
    out = out * d + digit_of(m, n - 1, n, d);
    out = out * d + digit_of(m, n, n, d);
    for (int s = 1; s <= n - 2; ++s) out = out * d + digit_of(m, s, n, d);
    shift[m] = out;
  }
}

Vec apply_J(const Vec& v, const ReflectionFrame& rf) {
  if (v.size() != rf.frame.dim_full())
    throw std::invalid_argument("apply_J: dimension mismatch");
  Vec out(v.size());
  for (Index m = 0; m < v.size(); ++m)
    out(rf.full_reversal[m]) = std::conj(v(m));
  return out;
}

Mat conjugate_operator_by_J(const Mat& a, const ReflectionFrame& rf) {
  const Index dim = rf.frame.dim_full();
  if (a.rows() != dim || a.cols() != dim)
    throw std::invalid_argument("conjugate_operator_by_J: dimension mismatch");
  Mat out(dim, dim);
  const Perm& R = rf.full_reversal;
  for (Index r = 0; r < dim; ++r)
    for (Index c = 0; c < dim; ++c)
      out(R[r], R[c]) = std::conj(a(r, c));
  return out;
}

DenseOperator conjugate_by_J(const DenseOperator& x,
                             const ReflectionFrame& rf) {
  if (x.subsystem != Subsystem::left)
    throw std::invalid_argument("conjugate_by_J: operator must be tagged left");
  const Index dh = rf.frame.dim_half();
  Mat out(dh, dh);
  const Perm& s = rf.half_reversal;
  for (Index r = 0; r < dh; ++r)
    for (Index c = 0; c < dh; ++c)
      out(r, c) = std::conj(x.matrix(s[r], s[c]));
  return DenseOperator(std::move(out), Subsystem::right, rf.frame);
}

Vec rotate(const Vec& v, const RotationFrame& rot, int k) {
  if (v.size() != rot.frame.dim_full())
    throw std::invalid_argument("rotate: dimension mismatch");
  const int N = rot.frame.n_half;
  int steps = ((k % N) + N) % N;
  Vec cur = v;
  for (int i = 0; i < steps; ++i) {
    Vec next(cur.size());
    for (Index m = 0; m < cur.size(); ++m) next(rot.shift[m]) = cur(m);
    cur.swap(next);
  }
  return cur;
}

Mat rotation_matrix(const RotationFrame& rot) {
  const Index dim = rot.frame.dim_full();
  Mat U = Mat::Zero(dim, dim);
  for (Index m = 0; m < dim; ++m) U(rot.shift[m], m) = 1.0;
  return U;
}

}  // namespace rpchain
