#pragma once

#include <seqgen/state.hpp>

#include <array>
#include <cstdint>
#include <vector>

namespace seqgen {

/// Matrix-product state with open boundary conditions.
///
/// The amplitude of |i_n, ..., i_1> is
///   <phi_F| V[n]^{i_n} ... V[1]^{i_1} |phi_I>,
/// where sites[k-1] holds the pair (V[k]^0, V[k]^1), each of shape
/// D_k x D_{k-1}. Site tensors are arbitrary maps; no isometry is assumed.
struct MPSState {
  std::vector<std::array<CMatrix, 2>> sites;
  CVector phi_I;  // dim D_0
  CVector phi_F;  // dim D_n

  int n() const { return static_cast<int>(sites.size()); }
};

/// Throws std::invalid_argument if bond dimensions do not chain, any
/// dimension is zero, or an entry is non-finite.
void validate_mps(const MPSState& m);

/// (D_0, ..., D_n).
std::vector<Index> bond_dimensions(const MPSState& m);

/// Contracts the MPS to a dense state by a single left-to-right sweep.
/// The result is flagged unnormalized when its norm strays from 1.
StateVector mps_evaluate(const MPSState& m);

/// Exact MPS of a dense state via successive SVDs, sweeping from the
/// last-emitted qubit down to the first. Bond dimension at each cut equals
/// the numerical Schmidt rank there; D_0 = D_n = 1.
MPSState state_to_mps(const StateVector& psi, double rank_tol = 1e-12,
                      bool allow_unnormalized = false);

/// I.i.d. complex Gaussian tensors and boundary vectors, all bonds = D.
/// Deterministic for a fixed seed. Not isometric in general.
MPSState random_mps(int n, Index D, std::uint64_t seed);

} // namespace seqgen
