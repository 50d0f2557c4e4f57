#pragma once

#include <seqgen/types.hpp>

namespace seqgen {

/// Pure state of n qubits, stored as 2^n amplitudes.
///
/// Bit convention used throughout the project: the k-th emitted qubit
/// (k = 1..n) is bit k-1 of the basis index, so the FIRST emitted qubit is
/// the least significant bit and later qubits occupy higher bits.
struct StateVector {
  int n = 0;
  CVector amps;

  // Set when a producer (e.g. evaluating an MPS built from arbitrary maps)
  // could not guarantee unit norm.
  bool unnormalized = false;
};

/// Validates length = 2^n and finite entries; throws std::invalid_argument.
StateVector make_state(int n, CVector amps);

double norm(const StateVector& psi);

/// Returns a unit-norm copy; throws on (numerically) zero states.
StateVector normalized(const StateVector& psi);

/// |<a|b>| / (|a| |b|), invariant under global phase. Throws on size
/// mismatch or zero-norm input.
double fidelity(const StateVector& a, const StateVector& b);

} // namespace seqgen
