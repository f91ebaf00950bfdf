#pragma once

#include "rpchain/chain.hpp"

namespace rpchain {

/// The CRT anti-unitary J acts on basis coordinates as v -> R conj(v)
/// where R is the site-reversal permutation. J is never materialized as
/// a single matrix: anti-linear maps have no matrix in the ordinary
/// sense, and treating J as linear is the classic bug this guards against.
struct ReflectionFrame {
  ChainFrame frame;
  Perm full_reversal;  // basis permutation of sigma on all 2N sites
  Perm half_reversal;  // index-string reversal within one half (N sites)

  explicit ReflectionFrame(const ChainFrame& f)
      : frame(f),
        full_reversal(reversal_perm(f.sites(), f.local_dim)),
        half_reversal(reversal_perm(f.n_half, f.local_dim)) {}
};

/// Shift-by-two-sites rotation U with U^N = 1.
struct RotationFrame {
  ChainFrame frame;
  Perm shift;  // basis permutation: (Uv)[shift[m]] = v[m]

  explicit RotationFrame(const ChainFrame& f);
};

/// J v = R conj(v); applying twice returns v exactly.
Vec apply_J(const Vec& v, const ReflectionFrame& rf);

/// j(rho) = R conj(rho) R for a linear operator on the full system.
Mat conjugate_operator_by_J(const Mat& a, const ReflectionFrame& rf);

/// Maps a left-subsystem operator to the mirrored right-subsystem
/// operator: (JxJ)_{rs} = conj(x_{sigma(r) sigma(s)}).
DenseOperator conjugate_by_J(const DenseOperator& x, const ReflectionFrame& rf);

/// U^k v (k may be negative; U^N = 1).
Vec rotate(const Vec& v, const RotationFrame& rot, int k);

/// Permutation matrix of U, for operator conjugation.
Mat rotation_matrix(const RotationFrame& rot);

}  // namespace rpchain
