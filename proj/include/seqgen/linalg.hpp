#pragma once

#include <seqgen/types.hpp>

namespace seqgen {

/// Thin SVD truncated to numerical rank: A = U * diag(sigma) * Wdag.
struct SVDResult {
  CMatrix U;       // m x r, orthonormal columns
  RVector sigma;   // r singular values, descending, all above the cutoff
  CMatrix Wdag;    // r x n, orthonormal rows
  Index rank = 0;  // r
};

/// Thin SVD of A keeping singular values sigma_k > rank_tol * sigma_max.
///
/// Columns of U are phase-fixed so that the first nonzero component of each
/// is real and non-negative (compensated in Wdag); tests should still only
/// rely on gauge-invariant facts.
SVDResult svd(const CMatrix& a, double rank_tol = 1e-12);

/// Extends an isometry V (m x k, k <= m) to an m x m unitary whose first k
/// columns are V itself, bit for bit. Throws if V is not an isometry.
CMatrix complete_to_unitary(const CMatrix& v, double tol = 1e-10);

/// Kronecker product, index (i*rowsB + p, j*colsB + q) = A(i,j) * B(p,q).
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// exp(-i G) for Hermitian G via eigendecomposition. Dimension capped at 16;
/// this is meant for small gate generators, not large propagators.
CMatrix exp_minus_iG(const CMatrix& g, double herm_tol = 1e-10);

struct IsometryCheck {
  bool isometric = false;
  double residual = 0.0;  // max-norm of V^dag V - I
};

/// Checks V^dag V = I within tol. Throws if rows < cols.
IsometryCheck is_isometry(const CMatrix& v, double tol);

} // namespace seqgen
