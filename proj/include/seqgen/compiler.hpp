#pragma once

#include <seqgen/mps.hpp>

#include <string>
#include <utility>
#include <vector>

namespace seqgen {

/// Sequence of ancilla-qubit isometries that generates a state when applied
/// to phi_I, with the ancilla decoupling after the last step.
///
/// Step k has shape (2 D_k) x D_{k-1} with row index r = i * D_k + alpha:
/// the emitted time-bin value i selects the block, the new ancilla index
/// alpha runs inside it.
struct Recipe {
  std::vector<CMatrix> isometries;
  CVector phi_I;
  CVector phi_F_expected;  // ancilla state after decoupling
  std::string note;

  int n() const { return static_cast<int>(isometries.size()); }
};

/// Ancilla dimensions (D_0, ..., D_n) implied by the step shapes.
std::vector<Index> recipe_dims(const Recipe& r);

/// Throws std::invalid_argument on shape-chaining violations or odd row
/// counts; isometry quality is not checked here (see verify_recipe).
void validate_recipe(const Recipe& r);

/// Per-step leftovers of the SVD induction. steps[k-1].M is the residual
/// map on bond k-1 produced while splitting off site k; the compiled chain
/// satisfies  stack_i(M_{k+1} V~^i_k) = V'_k M_k  within tolerance.
struct CompilerTrace {
  struct Step {
    CMatrix M;
    Index rows = 0;  // shape of the compiled isometry V'_k
    Index cols = 0;
    Index rank = 0;  // numerical rank used for bond k-1
  };
  std::vector<Step> steps;
  double state_norm = 0.0;  // |M_1 phi_I~|, the norm of the represented state
};

/// Converts an arbitrary MPS into a chain of true isometries by splitting
/// <phi_F| V~_n into V'_n M_n and then pushing the residual M through each
/// earlier site with a thin SVD. The final ancilla dimension is 1, so the
/// ancilla decouples trivially after the last step.
std::pair<Recipe, CompilerTrace> compile_mps(const MPSState& m, double rank_tol = 1e-12);

/// state_to_mps followed by compile_mps; the ancilla dimension equals the
/// largest Schmidt rank over the sequential cuts.
std::pair<Recipe, CompilerTrace> compile_state(const StateVector& psi,
                                               double rank_tol = 1e-12);

/// Worst-case step shapes for bond dimension D: step n-k is
/// 2 min(D, 2^k) x min(D, 2^{k+1}). Generic MPS meet these bounds exactly.
std::vector<std::pair<Index, Index>> dimension_schedule(int n, Index D);

/// Places an r x c isometry in the top-left of a (2D) x D isometry; the
/// added columns are orthonormal and, when room permits, supported on the
/// unused bottom rows. Throws if r > 2D or c > D.
CMatrix embed_isometry(const CMatrix& v, Index D, double tol = 1e-10);

/// Residual |stack_i(M_{k+1} V~^i_k) - V'_k M_k| per site (max-norm),
/// checking the induction that produced the recipe from this MPS.
std::vector<double> trace_residuals(const MPSState& m, const Recipe& r,
                                    const CompilerTrace& t);

struct VerifyReport {
  std::vector<double> step_residuals;  // is_isometry residual per step
  double max_step_residual = 0.0;
  double decoupling_residual = 0.0;  // second Schmidt coefficient at the end
  double fidelity_value = 0.0;       // emitted qubits vs target
  bool pass = false;
};

/// Simulates the recipe and checks isometry quality, decoupling, and
/// fidelity against the target, all at the given tolerance.
VerifyReport verify_recipe(const Recipe& r, const StateVector& target, double tol);

} // namespace seqgen
