#pragma once

#include <seqgen/compiler.hpp>
#include <seqgen/state.hpp>

#include <stdexcept>

namespace seqgen {

/// Ancilla plus emitted-qubit register, index = alpha * 2^emitted + b with
/// b following the StateVector bit convention.
struct JointState {
  Index ancilla_dim = 1;
  int emitted = 0;
  CVector amps;
};

/// Applies the recipe steps in order, starting from phi_I. Step k acts on
/// the ancilla factor and appends one qubit whose value is the block-row
/// index of the isometry. Capped at 16 steps / ancilla dimension 16; the
/// dense joint vector is a verification tool, not a scalability claim.
JointState run_recipe(const Recipe& r);

/// Singular values of the ancilla_dim x 2^emitted amplitude matrix,
/// descending, scaled to squared-sum 1.
RVector schmidt_spectrum(const JointState& s);

class NotDecoupledError : public std::runtime_error {
 public:
  NotDecoupledError(std::string msg, RVector schmidt)
      : std::runtime_error(std::move(msg)), spectrum(std::move(schmidt)) {}
  RVector spectrum;
};

struct DecoupledState {
  CVector ancilla;
  StateVector qubits;
};

/// Splits a joint state into its dominant product factors. Throws
/// NotDecoupledError (carrying the Schmidt spectrum) if the second Schmidt
/// coefficient is >= tol.
DecoupledState decouple(const JointState& s, double tol);

} // namespace seqgen
