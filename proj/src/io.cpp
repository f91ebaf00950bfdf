#include "rpchain/io.hpp"

#include <cmath>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

namespace rpchain {

std::vector<PauliString> parse_operator_terms(std::istream& in) {
  std::vector<PauliString> terms;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    double re, im;
    if (!(ls >> re))
      throw std::invalid_argument("operator file line " +
                                  std::to_string(lineno) +
                                  ": coefficient is not a number");
    if (!(ls >> im))
      throw std::invalid_argument("operator file line " +
                                  std::to_string(lineno) +
                                  ": missing imaginary part");
    std::map<int, char> labels;
    std::string tok;
    while (ls >> tok) {
      const auto colon = tok.find(':');
      if (colon == std::string::npos || colon + 2 != tok.size())
        throw std::invalid_argument("operator file line " +
                                    std::to_string(lineno) +
                                    ": bad token '" + tok + "'");
      const int site = std::stoi(tok.substr(0, colon));
      if (site < 1)
        throw std::invalid_argument("operator file line " +
                                    std::to_string(lineno) +
                                    ": sites are 1-based");
      labels[site] = tok[colon + 1];
    }
    terms.push_back(PauliString::from_labels(Complex(re, im), labels));
  }
  return terms;
}

std::vector<PauliString> load_operator_terms(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open operator file: " + path);
  return parse_operator_terms(in);
}

QuantumState load_state(const std::string& path, const ChainFrame& frame,
                        Subsystem sub) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open state file: " + path);
  std::string header;
  if (!std::getline(in, header))
    throw std::invalid_argument("state file is empty: " + path);
  std::istringstream hs(header);
  long d1 = 0, d2 = 0;
  hs >> d1;
  const bool density = static_cast<bool>(hs >> d2);
  const Index want = subsystem_dim(frame, sub);
  if (d1 != want || (density && d2 != want))
    throw std::invalid_argument("state file dimension mismatch: " + path);

  auto read_complex = [&in, &path]() {
    double re, im;
    if (!(in >> re >> im))
      throw std::invalid_argument("state file truncated: " + path);
    return Complex(re, im);
  };
  if (density) {
    Mat rho(d1, d1);
    for (long r = 0; r < d1; ++r)
      for (long c = 0; c < d1; ++c) rho(r, c) = read_complex();
    return QuantumState::mixed(std::move(rho), frame, sub);
  }
  Vec v(d1);
  for (long r = 0; r < d1; ++r) v(r) = read_complex();
  return QuantumState::pure(std::move(v), frame, sub);
}

namespace {

void write_value(std::ostream& out, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out << buf;
}

}  // namespace

void save_state(const QuantumState& state, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write state file: " + path);
  if (state.kind == StateKind::vector) {
    out << state.vector.size() << "\n";
    for (Index i = 0; i < state.vector.size(); ++i) {
      write_value(out, state.vector(i).real());
      out << " ";
      write_value(out, state.vector(i).imag());
      out << "\n";
    }
  } else {
    out << state.density.rows() << " " << state.density.cols() << "\n";
    for (Index r = 0; r < state.density.rows(); ++r)
      for (Index c = 0; c < state.density.cols(); ++c) {
        write_value(out, state.density(r, c).real());
        out << " ";
        write_value(out, state.density(r, c).imag());
        out << "\n";
      }
  }
}

void save_matrix_csv(const Mat& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write csv file: " + path);
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) {
      if (c) out << ",";
      write_value(out, m(r, c).real());
      out << ",";
      write_value(out, m(r, c).imag());
    }
    out << "\n";
  }
}

void save_matrix_csv(const RealMat& m, const std::string& path) {
  save_matrix_csv(Mat(m.cast<Complex>()), path);
}

nlohmann::json certificate_to_json(const RpCertificate& cert) {
  nlohmann::json j;
  j["schema"] = 1;
  j["verdict"] = to_string(cert.verdict);
  j["gram_min_eig"] = cert.gram_min_eig;
  j["gram_dim"] = cert.gram_dim;
  j["j_invariance_defect"] = cert.j_invariance_defect;
  j["reduced_rank"] = cert.reduced_rank;
  if (cert.witness) {
    nlohmann::json w = nlohmann::json::array();
    const Mat& x = *cert.witness;
    for (Index r = 0; r < x.rows(); ++r)
      for (Index c = 0; c < x.cols(); ++c)
        w.push_back({x(r, c).real(), x(r, c).imag()});
    j["witness"] = std::move(w);
  }
  return j;
}

}  // namespace rpchain
