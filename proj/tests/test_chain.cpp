#include <doctest.h>

#include <random>

#include "rpchain/chain.hpp"

using namespace rpchain;

namespace {

// EPR pair (|00> + |11>)/sqrt(2) on a 2-site chain.
QuantumState epr_state() {
  ChainFrame f(1, 2);
  Vec v = Vec::Zero(4);
  v(0) = v(3) = 1.0 / std::sqrt(2.0);
  return QuantumState::pure(std::move(v), f);
}

}  // namespace

TEST_CASE("assemble: Z on site 1 of a 2-site chain is Z (x) I") {
  ChainFrame f(1, 2);
  Mat m = assemble({PauliString::from_labels(1.0, {{1, 'Z'}})}, f).matrix;
  Mat want(4, 4);
  want << 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1;
  CHECK((m - want).cwiseAbs().maxCoeff() == doctest::Approx(0.0));
}

TEST_CASE("assemble: empty string is the identity") {
  ChainFrame f(2, 2);
  Mat m = assemble({PauliString::from_labels(1.0, {})}, f).matrix;
  CHECK((m - Mat::Identity(16, 16)).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("assemble: cluster terms are Hermitian and commute") {
  ChainFrame f(2, 2);
  const int n = 4;
  std::vector<DenseOperator> terms;
  for (int i = 1; i <= n; ++i) {
    const int prev = (i - 2 + n) % n + 1, next = i % n + 1;
    terms.push_back(assemble({PauliString::from_labels(
                                 1.0, {{prev, 'Z'}, {i, 'X'}, {next, 'Z'}})},
                             f));
    CHECK(terms.back().hermitian);
  }
  for (const auto& a : terms)
    for (const auto& b : terms) {
      Mat comm = a.matrix * b.matrix - b.matrix * a.matrix;
      CHECK(comm.cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("assemble is linear over term lists") {
  ChainFrame f(2, 2);
  std::vector<PauliString> t1 = {
      PauliString::from_labels({0.5, 0.25}, {{1, 'X'}, {3, 'Z'}})};
  std::vector<PauliString> t2 = {
      PauliString::from_labels({-1.0, 2.0}, {{2, 'Y'}}),
      PauliString::from_labels(1.0, {{4, 'Z'}})};
  std::vector<PauliString> all = t1;
  all.insert(all.end(), t2.begin(), t2.end());
  Mat sum = assemble(t1, f).matrix + assemble(t2, f).matrix;
  CHECK((assemble(all, f).matrix - sum).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("assemble rejects bad input") {
  ChainFrame f(1, 2);
  CHECK_THROWS_AS(assemble({PauliString::from_labels(1.0, {{3, 'X'}})}, f),
                  std::invalid_argument);
  PauliString wrong_dim;
  wrong_dim.letters[1] = Mat::Identity(3, 3);
  CHECK_THROWS_AS(assemble({wrong_dim}, f), std::invalid_argument);
}

TEST_CASE("partial_trace: EPR reduces to maximally mixed") {
  QuantumState rl = partial_trace(epr_state(), Subsystem::left);
  CHECK((rl.density - 0.5 * Mat::Identity(2, 2)).cwiseAbs().maxCoeff() <
        1e-12);
}

TEST_CASE("partial_trace: product vector |0>|1> keeps |0><0|") {
  ChainFrame f(1, 2);
  Vec v = Vec::Zero(4);
  v(1) = 1.0;  // |01>
  QuantumState st = QuantumState::pure(std::move(v), f);
  Mat rl = partial_trace(st, Subsystem::left).density;
  CHECK(std::abs(rl(0, 0) - 1.0) < 1e-15);
  CHECK(rl.cwiseAbs().sum() == doctest::Approx(1.0));
}

TEST_CASE("partial_trace: Schmidt symmetry of the two reductions") {
  ChainFrame f(2, 2);
  std::mt19937_64 rng(7);
  std::normal_distribution<double> g;
  Vec v(16);
  for (Index i = 0; i < 16; ++i) v(i) = Complex(g(rng), g(rng));
  v /= v.norm();
  QuantumState st = QuantumState::pure(std::move(v), f);
  Eigen::SelfAdjointEigenSolver<Mat> el(
      partial_trace(st, Subsystem::left).density, Eigen::EigenvaluesOnly);
  Eigen::SelfAdjointEigenSolver<Mat> er(
      partial_trace(st, Subsystem::right).density, Eigen::EigenvaluesOnly);
  CHECK((el.eigenvalues() - er.eigenvalues()).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("expectation: EPR correlators and normalization") {
  QuantumState epr = epr_state();
  ChainFrame f = epr.frame;
  auto zz = assemble({PauliString::from_labels(1.0, {{1, 'Z'}, {2, 'Z'}})}, f);
  auto xx = assemble({PauliString::from_labels(1.0, {{1, 'X'}, {2, 'X'}})}, f);
  CHECK(expectation(epr, zz).real() == doctest::Approx(1.0));
  CHECK(expectation(epr, xx).real() == doctest::Approx(1.0));
  auto id = assemble({PauliString::from_labels(1.0, {})}, f);
  CHECK(std::abs(expectation(epr, id) - Complex(1.0)) < 1e-12);
}

TEST_CASE("expectation: maximally mixed single site has <Z> = 0") {
  ChainFrame f(1, 2);
  QuantumState mm =
      QuantumState::mixed(0.5 * Mat::Identity(2, 2), f, Subsystem::left);
  CHECK(std::abs(expectation(mm, pauli_z())) < 1e-15);
}

TEST_CASE("expectation rejects dimension mismatch") {
  CHECK_THROWS_AS(expectation(epr_state(), Mat::Identity(2, 2)),
                  std::invalid_argument);
}

TEST_CASE("state validation") {
  ChainFrame f(1, 2);
  CHECK_THROWS_AS(QuantumState::pure(Vec::Ones(4), f), std::invalid_argument);
  Mat bad = Mat::Identity(4, 4);  // trace 4
  CHECK_THROWS_AS(QuantumState::mixed(bad, f), std::invalid_argument);
}
