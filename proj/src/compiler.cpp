#include <seqgen/compiler.hpp>

#include <seqgen/linalg.hpp>
#include <seqgen/simulator.hpp>

#include <algorithm>
#include <stdexcept>

namespace seqgen {

std::vector<Index> recipe_dims(const Recipe& r) {
  std::vector<Index> dims;
  dims.reserve(r.isometries.size() + 1);
  dims.push_back(r.phi_I.size());
  for (const auto& v : r.isometries) dims.push_back(v.rows() / 2);
  return dims;
}

void validate_recipe(const Recipe& r) {
  if (r.isometries.empty()) throw std::invalid_argument("recipe: no steps");
  Index prev = r.phi_I.size();
  if (prev < 1) throw std::invalid_argument("recipe: phi_I must have dimension >= 1");
  for (std::size_t k = 0; k < r.isometries.size(); ++k) {
    const CMatrix& v = r.isometries[k];
    if (v.rows() % 2 != 0 || v.rows() == 0)
      throw std::invalid_argument("recipe: step " + std::to_string(k + 1) +
                                  " must have an even, positive row count");
    if (v.cols() != prev)
      throw std::invalid_argument("recipe: step " + std::to_string(k + 1) +
                                  " does not chain with previous ancilla dimension");
    if (!v.allFinite())
      throw std::invalid_argument("recipe: non-finite entry at step " + std::to_string(k + 1));
    prev = v.rows() / 2;
  }
}

namespace {

// Stack the two time-bin blocks of one induction left-hand side.
CMatrix stack_blocks(const CMatrix& top, const CMatrix& bottom) {
  CMatrix out(top.rows() + bottom.rows(), top.cols());
  out.topRows(top.rows()) = top;
  out.bottomRows(bottom.rows()) = bottom;
  return out;
}

} // namespace

std::pair<Recipe, CompilerTrace> compile_mps(const MPSState& m, double rank_tol) {
  validate_mps(m);
  const int n = m.n();

  Recipe rec;
  rec.isometries.resize(n);
  CompilerTrace trace;
  trace.steps.resize(n);

  // Split off site n first: stack_i(<phi_F| V~^i_n) = V'_n M_n, then push
  // the residual through sites n-1 .. 1, each time keeping the thin-SVD
  // isometry and handing sigma * Wdag to the next site.
  CMatrix residual = m.phi_F.adjoint();
  for (int k = n; k >= 1; --k) {
    const auto& [v0, v1] = m.sites[k - 1];
    CMatrix lhs = stack_blocks(residual * v0, residual * v1);
    SVDResult dec;
    try {
      dec = svd(lhs, rank_tol);
    } catch (const std::invalid_argument&) {
      throw std::runtime_error("compile: numerical rank collapse at step " +
                               std::to_string(k));
    }
    rec.isometries[k - 1] = dec.U;
    residual = dec.sigma.asDiagonal() * dec.Wdag;
    trace.steps[k - 1] = CompilerTrace::Step{residual, dec.U.rows(), dec.U.cols(), dec.rank};
  }

  CVector phi = residual * m.phi_I;
  const double nrm = phi.norm();
  if (nrm < 1e-300) throw std::runtime_error("compile: state has zero norm");
  rec.phi_I = phi / nrm;
  rec.phi_F_expected = CVector::Ones(1);
  rec.note = "compiled";
  trace.state_norm = nrm;
  return {std::move(rec), std::move(trace)};
}

std::pair<Recipe, CompilerTrace> compile_state(const StateVector& psi, double rank_tol) {
  return compile_mps(state_to_mps(psi, rank_tol), rank_tol);
}

std::vector<std::pair<Index, Index>> dimension_schedule(int n, Index D) {
  if (n < 1 || D < 1) throw std::invalid_argument("dimension_schedule: n and D must be >= 1");
  auto cap = [D](int e) { return e >= 62 ? D : std::min(D, Index{1} << e); };
  std::vector<std::pair<Index, Index>> steps(n);
  for (int k = 0; k < n; ++k)
    steps[n - 1 - k] = {2 * cap(k), cap(k + 1)};
  return steps;
}

CMatrix embed_isometry(const CMatrix& v, Index D, double tol) {
  const Index r = v.rows();
  const Index c = v.cols();
  if (r > 2 * D || c > D)
    throw std::invalid_argument("embed_isometry: dims exceed target");
  if (!is_isometry(v, tol).isometric)
    throw std::invalid_argument("embed_isometry: not an isometry");

  CMatrix out = CMatrix::Zero(2 * D, D);
  out.topLeftCorner(r, c) = v;
  if (c == D) return out;

  if (2 * D - r >= D - c) {
    // Enough unused bottom rows to host the padding columns directly.
    for (Index j = 0; j < D - c; ++j) out(r + j, c + j) = 1.0;
  } else {
    CMatrix padded = CMatrix::Zero(2 * D, c);
    padded.topRows(r) = v;
    out.rightCols(D - c) = complete_to_unitary(padded, tol).middleCols(c, D - c);
  }
  return out;
}

std::vector<double> trace_residuals(const MPSState& m, const Recipe& r,
                                    const CompilerTrace& t) {
  validate_mps(m);
  const int n = m.n();
  if (r.n() != n || static_cast<int>(t.steps.size()) != n)
    throw std::invalid_argument("trace_residuals: size mismatch");

  std::vector<double> out(n);
  for (int k = n; k >= 1; --k) {
    const auto& [v0, v1] = m.sites[k - 1];
    CMatrix m_in = (k == n) ? CMatrix(m.phi_F.adjoint()) : t.steps[k].M;
    CMatrix lhs = stack_blocks(m_in * v0, m_in * v1);
    CMatrix rhs = r.isometries[k - 1] * t.steps[k - 1].M;
    out[k - 1] = (lhs - rhs).cwiseAbs().maxCoeff();
  }
  return out;
}

VerifyReport verify_recipe(const Recipe& r, const StateVector& target, double tol) {
  validate_recipe(r);
  if (target.n != r.n())
    throw std::invalid_argument("verify_recipe: target qubit count does not match recipe");

  VerifyReport report;
  report.step_residuals.reserve(r.isometries.size());
  for (const auto& v : r.isometries)
    report.step_residuals.push_back(is_isometry(v, tol).residual);
  report.max_step_residual =
      *std::max_element(report.step_residuals.begin(), report.step_residuals.end());

  JointState joint = run_recipe(r);
  RVector spectrum = schmidt_spectrum(joint);
  report.decoupling_residual = spectrum.size() > 1 ? spectrum(1) : 0.0;

  // Fidelity of the dominant emitted-qubit factor, decoupled or not.
  Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
      amp_matrix(joint.amps.data(), joint.ancilla_dim, Index{1} << joint.emitted);
  Eigen::JacobiSVD<CMatrix> dec(amp_matrix, Eigen::ComputeThinV);
  StateVector emitted = make_state(joint.emitted, dec.matrixV().col(0).conjugate());
  report.fidelity_value = fidelity(emitted, target);

  report.pass = report.max_step_residual <= tol && report.decoupling_residual < tol &&
                report.fidelity_value >= 1.0 - tol;
  return report;
}

} // namespace seqgen
