#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "rpchain/io.hpp"
#include "rpchain/models.hpp"

using namespace rpchain;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) : path("/tmp/rpchain_" + name) {}
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("parse_operator_terms: terms, comments, blank lines") {
  std::istringstream in(
      "# transverse field\n"
      "\n"
      "-1 0 1:X 2:X\n"
      "0 -0.5 3:Y\n"
      "2 0\n");
  auto terms = parse_operator_terms(in);
  REQUIRE(terms.size() == 3);
  CHECK(terms[0].coeff == Complex(-1.0, 0.0));
  CHECK(terms[0].letters.size() == 2);
  CHECK((terms[0].letters.at(1) - pauli_x()).cwiseAbs().maxCoeff() == 0.0);
  CHECK(terms[1].coeff == Complex(0.0, -0.5));
  CHECK((terms[1].letters.at(3) - pauli_y()).cwiseAbs().maxCoeff() == 0.0);
  CHECK(terms[2].letters.empty());  // scaled identity
}

TEST_CASE("parse_operator_terms rejects malformed lines") {
  std::istringstream bad1("1 0 0:X\n");  // site must be >= 1
  CHECK_THROWS_AS(parse_operator_terms(bad1), std::invalid_argument);
  std::istringstream bad2("1 0 2:Q\n");  // unknown letter
  CHECK_THROWS_AS(parse_operator_terms(bad2), std::invalid_argument);
  std::istringstream bad3("notanumber 0 1:X\n");
  CHECK_THROWS_AS(parse_operator_terms(bad3), std::invalid_argument);
}

TEST_CASE("operator file round trip through assemble") {
  TempFile tf("op.txt");
  {
    std::ofstream out(tf.path);
    out << "# TFIM, 2 sites\n-1 0 1:X 2:X\n-1 0 1:Z\n-1 0 2:Z\n";
  }
  ChainFrame f(1, 2);
  auto terms = load_operator_terms(tf.path);
  Mat h = assemble(terms, f).matrix;
  Mat want = tfim_hamiltonian(2, /*periodic=*/false).matrix;
  // the 2-site periodic chain doubles the bond; compare to the open one
  CHECK((h - want).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("save_state / load_state: vector round trip is bit-faithful") {
  ChainFrame f(1, 2);
  Vec v(4);
  v << Complex(0.5, 0.5), Complex(-0.5, 0.0), Complex(0.0, 0.5),
      Complex(1.0 / 3.0, -1.0 / 3.0);
  v /= v.norm();
  QuantumState st = QuantumState::pure(v, f);
  TempFile tf("vec.txt");
  save_state(st, tf.path);
  QuantumState back = load_state(tf.path, f);
  CHECK(back.kind == StateKind::vector);
  CHECK((back.vector - v).norm() == 0.0);
}

TEST_CASE("save_state / load_state: density round trip") {
  ChainFrame f(1, 2);
  Mat rho(4, 4);
  rho.setZero();
  rho(0, 0) = 0.5;
  rho(3, 3) = 0.5;
  rho(0, 3) = rho(3, 0) = 0.25;
  QuantumState st = QuantumState::mixed(rho, f);
  TempFile tf("rho.txt");
  save_state(st, tf.path);
  QuantumState back = load_state(tf.path, f);
  CHECK(back.kind == StateKind::density);
  CHECK((back.density - rho).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("load_state validates dimension against the frame") {
  ChainFrame f(1, 2);
  TempFile tf("wrongdim.txt");
  {
    std::ofstream out(tf.path);
    out << "8\n";
    for (int i = 0; i < 8; ++i) out << (i == 0 ? 1.0 : 0.0) << " 0\n";
  }
  CHECK_THROWS_AS(load_state(tf.path, f), std::invalid_argument);
  CHECK_THROWS_AS(load_state("/tmp/rpchain_does_not_exist_42.txt", f),
                  std::invalid_argument);
}

TEST_CASE("save_matrix_csv writes re,im cells") {
  TempFile tf("mat.csv");
  Mat m(1, 2);
  m << Complex(1.0, -2.0), Complex(0.5, 0.0);
  save_matrix_csv(m, tf.path);
  std::ifstream in(tf.path);
  std::string line;
  std::getline(in, line);
  CHECK(line == "1,-2,0.5,0");
}

TEST_CASE("certificate_to_json carries the full verdict") {
  ChainFrame f(1, 2);
  ReflectionFrame rf(f);
  Vec v = Vec::Zero(4);
  v(1) = 1.0 / std::sqrt(2.0);
  v(2) = -1.0 / std::sqrt(2.0);
  RpCertificate cert = check_rp(QuantumState::pure(std::move(v), f), rf);
  nlohmann::json j = certificate_to_json(cert);
  CHECK(j.at("schema") == 1);
  CHECK(j.at("verdict") == "not_rp");
  CHECK(j.at("gram_dim") == 4);
  CHECK(std::abs(j.at("gram_min_eig").get<double>() + 0.5) < 1e-12);
  REQUIRE(j.contains("witness"));
  CHECK(j.at("witness").size() == 4);  // 2x2 entries as [re, im]
}

TEST_CASE("certificate_to_json omits the witness when passing") {
  ChainFrame f(1, 2);
  ReflectionFrame rf(f);
  Vec epr = Vec::Zero(4);
  epr(0) = epr(3) = 1.0 / std::sqrt(2.0);
  RpCertificate cert = check_rp(QuantumState::pure(std::move(epr), f), rf);
  nlohmann::json j = certificate_to_json(cert);
  CHECK(j.at("verdict") == "strictly_rp");
  CHECK_FALSE(j.contains("witness"));
}

TEST_CASE("json serialization is deterministic") {
  ChainFrame f(1, 2);
  ReflectionFrame rf(f);
  QuantumState mm = QuantumState::mixed(0.25 * Mat::Identity(4, 4), f);
  std::string a = certificate_to_json(check_rp(mm, rf)).dump(2);
  std::string b = certificate_to_json(check_rp(mm, rf)).dump(2);
  CHECK(a == b);
}
