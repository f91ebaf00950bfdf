#include <doctest.h>

#include <random>

#include "rpchain/symmetry.hpp"

using namespace rpchain;

namespace {

Vec random_vec(std::mt19937_64& rng, Index dim) {
  std::normal_distribution<double> g;
  Vec v(dim);
  for (Index i = 0; i < dim; ++i) v(i) = Complex(g(rng), g(rng));
  return v / v.norm();
}

Index basis_index(const std::vector<int>& digits, int d) {
  Index m = 0;
  for (int dg : digits) m = m * d + dg;
  return m;
}

}  // namespace

TEST_CASE("apply_J reverses and conjugates basis vectors (d = 3)") {
  ChainFrame f(2, 3);
  ReflectionFrame rf(f);
  Vec v = Vec::Zero(f.dim_full());
  v(basis_index({0, 1, 0, 2}, 3)) = 1.0;
  Vec jv = apply_J(v, rf);
  CHECK(std::abs(jv(basis_index({2, 0, 1, 0}, 3)) - Complex(1.0)) < 1e-15);
  CHECK(jv.cwiseAbs().sum() == doctest::Approx(1.0));
}

TEST_CASE("apply_J is anti-linear and involutive") {
  ChainFrame f(1, 2);
  ReflectionFrame rf(f);
  Vec v = Vec::Zero(4);
  v(0) = Complex(0.0, 1.0);  // i |00>
  Vec jv = apply_J(v, rf);
  CHECK(std::abs(jv(0) - Complex(0.0, -1.0)) < 1e-15);

  std::mt19937_64 rng(3);
  Vec w = random_vec(rng, 4);
  CHECK((apply_J(apply_J(w, rf), rf) - w).norm() == 0.0);
}

TEST_CASE("apply_J is anti-unitary on inner products") {
  ChainFrame f(2, 2);
  ReflectionFrame rf(f);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 10; ++t) {
    Vec v = random_vec(rng, 16), w = random_vec(rng, 16);
    Complex lhs = apply_J(v, rf).dot(apply_J(w, rf));
    CHECK(std::abs(lhs - std::conj(v.dot(w))) < 1e-13);
  }
}

TEST_CASE("conjugate_by_J mirrors Pauli letters") {
  ChainFrame f(2, 2);  // 2N = 4
  ReflectionFrame rf(f);

  // X on left site N = 2 -> X on right site N+1 = 3.
  auto xN = assemble({PauliString::from_labels(1.0, {{2, 'X'}})}, f,
                     Subsystem::left);
  auto mirrored = conjugate_by_J(xN, rf);
  // Right-subsystem site labels run N+1..2N, i.e. local sites 1..N; site
  // N+1 is the first right site.
  auto want = assemble({PauliString::from_labels(1.0, {{1, 'X'}})}, f,
                       Subsystem::right);
  CHECK((mirrored.matrix - want.matrix).cwiseAbs().maxCoeff() < 1e-15);

  // Y on site 1 -> -Y on site 2N (Y is purely imaginary).
  auto y1 = assemble({PauliString::from_labels(1.0, {{1, 'Y'}})}, f,
                     Subsystem::left);
  auto wantY = assemble({PauliString::from_labels(-1.0, {{2, 'Y'}})}, f,
                        Subsystem::right);
  CHECK((conjugate_by_J(y1, rf).matrix - wantY.matrix).cwiseAbs().maxCoeff() <
        1e-15);

  // i * identity -> -i * identity (anti-linearity).
  DenseOperator iid(Complex(0, 1) * Mat::Identity(4, 4), Subsystem::left, f);
  CHECK((conjugate_by_J(iid, rf).matrix +
         Complex(0, 1) * Mat::Identity(4, 4))
            .cwiseAbs()
            .maxCoeff() < 1e-15);

  CHECK_THROWS_AS(conjugate_by_J(mirrored, rf), std::invalid_argument);
}

TEST_CASE("conjugate_by_J is an anti-homomorphism on products") {
  ChainFrame f(2, 2);
  ReflectionFrame rf(f);
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g;
  for (int t = 0; t < 8; ++t) {
    Mat x(4, 4), y(4, 4);
    for (Index i = 0; i < 4; ++i)
      for (Index j = 0; j < 4; ++j) {
        x(i, j) = Complex(g(rng), g(rng));
        y(i, j) = Complex(g(rng), g(rng));
      }
    DenseOperator xl(x, Subsystem::left, f), yl(y, Subsystem::left, f);
    DenseOperator xyl(x * y, Subsystem::left, f);
    Mat lhs = conjugate_by_J(xyl, rf).matrix;
    Mat rhs = conjugate_by_J(xl, rf).matrix * conjugate_by_J(yl, rf).matrix;
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("rotate shifts product states by two sites") {
  ChainFrame f(2, 2);  // 2N = 4
  RotationFrame rot(f);
  Vec v = Vec::Zero(16);
  v(basis_index({0, 1, 1, 0}, 2)) = 1.0;  // |a b c d> = |0110>
  Vec u = rotate(v, rot, 1);
  CHECK(std::abs(u(basis_index({1, 0, 0, 1}, 2)) - Complex(1.0)) < 1e-15);  // |c d a b>

  std::mt19937_64 rng(9);
  Vec w = random_vec(rng, 16);
  CHECK((rotate(w, rot, f.n_half) - w).norm() == 0.0);
  CHECK((rotate(rotate(w, rot, 1), rot, -1) - w).norm() == 0.0);
}

TEST_CASE("dihedral relation J U J = U^{-1} holds exactly") {
  ChainFrame f(3, 2);
  ReflectionFrame rf(f);
  RotationFrame rot(f);
  Mat U = rotation_matrix(rot);
  // J U J as a linear map is R conj(U) R = R U R (U real).
  Mat R = Mat::Zero(U.rows(), U.cols());
  for (Index m = 0; m < U.rows(); ++m) R(rf.full_reversal[m], m) = 1.0;
  CHECK((R * U * R - U.transpose()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("expectation transforms correctly under J") {
  ChainFrame f(2, 2);
  ReflectionFrame rf(f);
  std::mt19937_64 rng(13);
  std::normal_distribution<double> g;
  for (int t = 0; t < 10; ++t) {
    Mat a(16, 16);
    for (Index i = 0; i < 16; ++i)
      for (Index j = 0; j < 16; ++j) a(i, j) = Complex(g(rng), g(rng));
    a = 0.5 * (a + a.adjoint()).eval();
    Vec v = random_vec(rng, 16);
    Vec jv = apply_J(v, rf);
    Complex lhs = jv.dot(a * jv);
    Complex rhs = std::conj(v.dot(conjugate_operator_by_J(a, rf) * v));
    CHECK(std::abs(lhs - rhs) < 1e-11);
  }
}
