#include <seqgen/simulator.hpp>

#include <Eigen/SVD>
#include <sstream>

namespace seqgen {

namespace {

constexpr int kMaxSteps = 16;
constexpr Index kMaxAncilla = 16;

using RowMajorMap =
    Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;

RowMajorMap amp_matrix(const JointState& s) {
  return RowMajorMap(s.amps.data(), s.ancilla_dim, Index{1} << s.emitted);
}

} // namespace

JointState run_recipe(const Recipe& r) {
  validate_recipe(r);
  if (r.n() > kMaxSteps)
    throw std::invalid_argument("run_recipe: more than 16 steps (desk-scale cap)");
  for (const auto& v : r.isometries)
    if (v.rows() / 2 > kMaxAncilla || v.cols() > kMaxAncilla)
      throw std::invalid_argument("run_recipe: ancilla dimension above 16 (desk-scale cap)");

  // Columns enumerate emitted bit strings; step k doubles them, writing the
  // new qubit's value into bit k-1.
  CMatrix a = r.phi_I;
  for (std::size_t k = 0; k < r.isometries.size(); ++k) {
    const CMatrix& v = r.isometries[k];
    const Index dk = v.rows() / 2;
    if (v.cols() != a.rows())
      throw std::invalid_argument("run_recipe: shape mismatch at step " + std::to_string(k + 1));
    CMatrix next(dk, 2 * a.cols());
    next.leftCols(a.cols()).noalias() = v.topRows(dk) * a;
    next.rightCols(a.cols()).noalias() = v.bottomRows(dk) * a;
    a.swap(next);
  }

  JointState out;
  out.ancilla_dim = a.rows();
  out.emitted = r.n();
  out.amps.resize(a.size());
  Eigen::Map<Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
      out.amps.data(), a.rows(), a.cols()) = a;
  return out;
}

RVector schmidt_spectrum(const JointState& s) {
  if (s.emitted < 1) throw std::invalid_argument("schmidt_spectrum: no emitted qubits");
  if (s.amps.size() != s.ancilla_dim * (Index{1} << s.emitted))
    throw std::invalid_argument("schmidt_spectrum: amplitude length mismatch");
  const double nrm = s.amps.norm();
  if (nrm < 1e-300) throw std::invalid_argument("schmidt_spectrum: zero state");

  Eigen::JacobiSVD<CMatrix> dec{CMatrix(amp_matrix(s))};
  return dec.singularValues() / nrm;
}

DecoupledState decouple(const JointState& s, double tol) {
  if (s.emitted < 1) throw std::invalid_argument("decouple: no emitted qubits");
  Eigen::JacobiSVD<CMatrix> dec(CMatrix(amp_matrix(s)),
                                Eigen::ComputeThinU | Eigen::ComputeThinV);
  RVector spectrum = dec.singularValues();
  const double nrm = spectrum.norm();
  if (nrm < 1e-300) throw std::invalid_argument("decouple: zero state");
  spectrum /= nrm;

  if (spectrum.size() > 1 && spectrum(1) >= tol) {
    std::ostringstream msg;
    msg << "ancilla not decoupled; Schmidt spectrum:";
    for (Index i = 0; i < spectrum.size(); ++i) msg << ' ' << spectrum(i);
    throw NotDecoupledError(msg.str(), spectrum);
  }

  // amps(alpha, b) ~ sigma_0 u_0(alpha) conj(w_0(b))
  return DecoupledState{dec.matrixU().col(0),
                        make_state(s.emitted, dec.matrixV().col(0).conjugate())};
}

} // namespace seqgen
