#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "rpchain/types.hpp"

namespace rpchain {

/// Geometry of a periodic chain of 2N sites with local dimension d.
/// Basis convention: site 1 carries the most significant digit of the
/// base-d index (big-endian).
struct ChainFrame {
  int n_half = 1;    // the N of the chain; length is 2N
  int local_dim = 2;

  ChainFrame() = default;
  ChainFrame(int n, int d) : n_half(n), local_dim(d) {
    if (n < 1) throw std::invalid_argument("ChainFrame: n_half must be >= 1");
    if (d < 2) throw std::invalid_argument("ChainFrame: local_dim must be >= 2");
  }

  int sites() const { return 2 * n_half; }
  Index dim_half() const { return ipow(local_dim, n_half); }
  Index dim_full() const { return ipow(local_dim, 2 * n_half); }

  /// Site reflection sigma(i) = 2N+1-i (1-based), exchanging halves.
  int reflect_site(int i) const { return 2 * n_half + 1 - i; }

  static Index ipow(int b, int e) {
    Index r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
  }
};

enum class Subsystem { full, left, right };

inline Index subsystem_dim(const ChainFrame& f, Subsystem s) {
  return s == Subsystem::full ? f.dim_full() : f.dim_half();
}

inline int subsystem_sites(const ChainFrame& f, Subsystem s) {
  return s == Subsystem::full ? f.sites() : f.n_half;
}

// Pauli matrices and letter lookup.
Mat pauli_x();
Mat pauli_y();
Mat pauli_z();
Mat pauli_letter(char c);  // 'X','Y','Z','I'

/// One term coeff * prod_i L_i of single-site operators; absent sites act
/// as identity. Letters are stored as explicit d x d matrices so qudit
/// chains can supply raw matrices.
struct PauliString {
  Complex coeff{1.0, 0.0};
  std::map<int, Mat> letters;  // 1-based site -> d x d matrix

  PauliString() = default;
  PauliString(Complex c, std::map<int, Mat> l)
      : coeff(c), letters(std::move(l)) {}

  static PauliString from_labels(Complex c, const std::map<int, char>& labels);
};

struct DenseOperator {
  Mat matrix;
  Subsystem subsystem = Subsystem::full;
  ChainFrame frame;
  bool hermitian = false;

  DenseOperator() = default;
  DenseOperator(Mat m, Subsystem s, const ChainFrame& f,
                double herm_tol = 1e-12);
};

enum class StateKind { vector, density };

/// Pure vector or density matrix, validated on construction:
/// unit norm / Hermitian trace-1 PSD within tolerance.
struct QuantumState {
  StateKind kind = StateKind::vector;
  Vec vector;       // valid when kind == vector
  Mat density;      // valid when kind == density
  Subsystem subsystem = Subsystem::full;
  ChainFrame frame;

  static QuantumState pure(Vec v, const ChainFrame& f,
                           Subsystem s = Subsystem::full);
  static QuantumState mixed(Mat rho, const ChainFrame& f,
                            Subsystem s = Subsystem::full);

  Index dim() const {
    return kind == StateKind::vector ? vector.size() : density.rows();
  }
  /// Density-matrix view (outer product for pure states).
  Mat as_density() const;
};

// Base-d index bookkeeping (digit of site 1 is most significant).
int digit_of(Index idx, int site, int n_sites, int d);
Index reversed_index(Index idx, int n_sites, int d);

/// Permutation p with p[m] = index whose digit string is reversed.
Perm reversal_perm(int n_sites, int d);

/// Sum of Kronecker products of the given strings.
DenseOperator assemble(const std::vector<PauliString>& terms,
                       const ChainFrame& frame,
                       Subsystem sub = Subsystem::full);

/// Reduction to an arbitrary ordered subset of sites (1-based, ascending).
Mat partial_trace_sites(const QuantumState& state,
                        const std::vector<int>& keep_sites);

/// Restriction of a full-system state to one half.
QuantumState partial_trace(const QuantumState& state, Subsystem keep);

Complex expectation(const QuantumState& state, const DenseOperator& op);
Complex expectation(const QuantumState& state, const Mat& op);

}  // namespace rpchain
