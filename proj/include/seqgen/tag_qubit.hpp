#pragma once

#include <seqgen/types.hpp>

namespace seqgen {

// A 2D-level atom splits into D "a" levels and D "b" levels; the binary
// label is the tag-qubit, H_A = H_A' (x) H_T with atom index alpha*2 + t.
// Joint states with the fresh time-bin qubit live on H_A' (x) H_T (x) H_B,
// index alpha*4 + t*2 + b.

/// Unitary on 4*d_prime dims that exchanges the tag-qubit with the time-bin
/// qubit: |phi>|t>_T|b>_B -> |phi>|b>_T|t>_B. A permutation matrix.
CMatrix d_standard_map(Index d_prime);

/// Isometry realized by an atomic unitary: V|phi> = <0|_T T (U_A(|phi>|0>_T) (x) |0>_B).
/// Equals the |0>_T-input column block of U_A with the tag read out as the
/// emitted time-bin. Throws if U_A is not unitary (or has odd dimension).
CMatrix iso_from_atomic_unitary(const CMatrix& u_atom, double tol = 1e-10);

/// Inverse direction: places V's columns as the |0>_T-input columns of an
/// atomic unitary and completes the rest. Round-trips exactly through
/// iso_from_atomic_unitary.
CMatrix atomic_unitary_from_iso(const CMatrix& v, double tol = 1e-10);

/// exp(-iG) with G = (|a,0><b,1| + h.c.) pi/4 on basis (|a,0>, |a,1>,
/// |b,0>, |b,1>); acts as cos(pi/4) I - i sin(pi/4) X on the coupled pair.
CMatrix sqrt_swap();

} // namespace seqgen
