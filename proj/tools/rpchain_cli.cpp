// Command-line surface: every subcommand emits a JSON report and exits
// 0 when all assertions hold, 1 on a claim violation, 2 on input error.

#include <cmath>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

#include <CLI11.hpp>

#include "rpchain/io.hpp"
#include "rpchain/models.hpp"
#include "rpchain/rotation.hpp"

using nlohmann::json;
using namespace rpchain;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;

void guard_size(int n_half, int d) {
  const double qubits = 2.0 * n_half * std::log2(static_cast<double>(d));
  if (qubits > 24.0)
    throw std::invalid_argument("size guard: 2N*log2(d) must be <= 24");
}

void emit(const json& j, const std::string& out_path) {
  const std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot write: " + out_path);
    out << text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reflection-positivity toolkit for finite spin chains"};
  app.require_subcommand(1);

  int n_half = 2;
  int local_dim = 2;
  double beta = 1.0;
  unsigned long long seed = 1;
  int trials = 20;
  int grid = 4;
  std::string in_path, hl_path, h0_path, out_path, csv_prefix, state_out;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", n_half, "half-chain length N (chain is 2N sites)");
    sub->add_option("--d", local_dim, "local dimension");
    sub->add_option("--out", out_path, "write the JSON report here");
  };

  auto* c_check = app.add_subcommand("check-rp", "certify a state file");
  c_check->add_option("file", in_path)->required();
  add_common(c_check);

  auto* c_purify =
      app.add_subcommand("purify", "canonically purify a left density file");
  c_purify->add_option("file", in_path)->required();
  c_purify->add_option("--state-out", state_out, "write the purified vector");
  add_common(c_purify);

  auto* c_cluster = app.add_subcommand("cluster-demo", "cluster-state demo");
  add_common(c_cluster);

  auto* c_tfim = app.add_subcommand("tfim-demo", "transverse-field Ising demo");
  c_tfim->add_option("--csv-prefix", csv_prefix,
                     "emit <prefix>_b.csv and <prefix>_a.csv");
  add_common(c_tfim);

  auto* c_gibbs = app.add_subcommand("gibbs-rp", "Gibbs-state RP certificate");
  c_gibbs->add_option("--hl", hl_path, "left Hamiltonian operator file")
      ->required();
  c_gibbs->add_option("--h0", h0_path, "coupling operator file")->required();
  c_gibbs->add_option("--beta", beta, "inverse temperature");
  add_common(c_gibbs);

  auto* c_ang = app.add_subcommand("angular-momentum",
                                   "rotation eigenvalue of a state vector");
  c_ang->add_option("file", in_path)->required();
  add_common(c_ang);

  auto* c_pf = app.add_subcommand("perron-frobenius",
                                  "randomized top-eigenvector suite");
  c_pf->add_option("--seed", seed);
  c_pf->add_option("--trials", trials);
  add_common(c_pf);

  auto* c_uniq = app.add_subcommand("uniqueness-oracle",
                                    "phase-grid purification uniqueness");
  c_uniq->add_option("file", in_path)->required();
  c_uniq->add_option("--grid", grid, "phase grid size");
  add_common(c_uniq);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    guard_size(n_half, local_dim);
    ChainFrame frame(n_half, local_dim);
    ReflectionFrame rf(frame);
    bool ok = true;
    json j;
    j["schema"] = 1;

    if (*c_check) {
      QuantumState st = load_state(in_path, frame);
      RpCertificate cert = check_rp(st, rf);
      j.update(certificate_to_json(cert));
      ok = cert.passing();
    } else if (*c_purify) {
      QuantumState rho = load_state(in_path, frame, Subsystem::left);
      QuantumState psi = canonical_purification(rho, rf);
      RpCertificate cert = check_rp(psi, rf);
      j.update(certificate_to_json(cert));
      double rt = (partial_trace(psi, Subsystem::left).density - rho.density)
                      .cwiseAbs()
                      .maxCoeff();
      j["round_trip_dev"] = rt;
      ok = cert.passing() && rt < 1e-10;
      if (!state_out.empty()) save_state(psi, state_out);
    } else if (*c_cluster) {
      ClusterDemoReport rep = cluster_purification_demo(n_half);
      j["zzzz"] = rep.zzzz;
      j["zz_outer"] = rep.zz_outer;
      j["zz_inner"] = rep.zz_inner;
      j["reduced_state_dev"] = rep.reduced_state_dev;
      j["purified_verdict"] = to_string(rep.purified_cert.verdict);
      ok = std::abs(rep.zzzz - 1.0) < 1e-10 &&
           std::abs(rep.zz_outer) < 1e-10 && std::abs(rep.zz_inner) < 1e-10 &&
           rep.reduced_state_dev < 1e-11 && rep.purified_cert.passing();
    } else if (*c_tfim) {
      GroundState gs = tfim_ground_state(n_half);
      RpCertificate cert = check_rp(gs.state, rf);
      CovarianceCheck cov = covariance_from_ground_state(n_half);
      AMatrixReport am = a_matrix_pd(n_half);
      j["energy"] = gs.energy;
      j["gap"] = gs.gap;
      j["strict_rp"] = cert.verdict == RpVerdict::strictly_rp;
      j["gram_min_eig"] = cert.gram_min_eig;
      j["covariance_max_dev"] = cov.max_dev;
      j["covariance_sector"] = cov.sector;
      j["a_min_eig"] = am.min_eig;
      if (!csv_prefix.empty()) {
        save_matrix_csv(cov.cov.b(), csv_prefix + "_b.csv");
        save_matrix_csv(am.a, csv_prefix + "_a.csv");
      }
      ok = cert.verdict == RpVerdict::strictly_rp && cov.max_dev < 1e-9 &&
           am.min_eig > 0.0;
    } else if (*c_gibbs) {
      GibbsDecomposition dec{
          assemble(load_operator_terms(hl_path), frame, Subsystem::left),
          assemble(load_operator_terms(h0_path), frame, Subsystem::full),
          beta};
      RpCertificate cert = gibbs_rp(dec, rf);
      j.update(certificate_to_json(cert));
      j["beta"] = beta;
      ok = cert.passing();
    } else if (*c_ang) {
      QuantumState st = load_state(in_path, frame);
      RotationFrame rot(frame);
      AngularMomentumReport rep = angular_momentum(st, rot, rf);
      j["is_invariant"] = rep.is_invariant;
      j["eigenvalue"] = {rep.eigenvalue.real(), rep.eigenvalue.imag()};
      j["verdict"] = to_string(rep.rp_verdict.verdict);
      j["proposition_holds"] = rep.proposition_holds;
      ok = rep.proposition_holds;
    } else if (*c_pf) {
      RotationFrame rot(frame);
      std::mt19937_64 rng(seed);
      int full_rank = 0, strict = 0;
      for (int t = 0; t < trials; ++t) {
        QuantumState rho = random_strict_rp_density(rng, rf);
        PerronFrobeniusReport rep = perron_frobenius_check(rho, rf);
        if (rep.full_schmidt_rank) full_rank++;
        if (rep.projector_cert.verdict == RpVerdict::strictly_rp) strict++;
      }
      j["trials"] = trials;
      j["seed"] = seed;
      j["full_schmidt_rank"] = full_rank;
      j["strict_projector"] = strict;
      ok = full_rank == trials && strict == trials;
    } else if (*c_uniq) {
      QuantumState rho = load_state(in_path, frame, Subsystem::left);
      UniquenessReport rep = uniqueness_oracle(rho, rf, grid);
      j["grid"] = rep.grid;
      j["total"] = rep.total;
      j["passed"] = rep.passed;
      j["only_zero_phase"] = rep.only_zero_phase;
      ok = rep.only_zero_phase;
    }

    j["ok"] = ok;
    emit(j, out_path);
    return ok ? kExitOk : kExitViolation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitViolation;
  }
}
