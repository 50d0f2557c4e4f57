#include <seqgen/state.hpp>

#include <stdexcept>

namespace seqgen {

StateVector make_state(int n, CVector amps) {
  if (n < 1) throw std::invalid_argument("state: qubit count must be >= 1");
  if (amps.size() != (Index{1} << n))
    throw std::invalid_argument("state: amplitude count does not match 2^n");
  if (!amps.allFinite()) throw std::invalid_argument("state: non-finite amplitude");
  return StateVector{n, std::move(amps)};
}

double norm(const StateVector& psi) { return psi.amps.norm(); }

StateVector normalized(const StateVector& psi) {
  const double nrm = psi.amps.norm();
  if (nrm < 1e-300) throw std::invalid_argument("state: cannot normalize zero state");
  return StateVector{psi.n, psi.amps / nrm, false};
}

double fidelity(const StateVector& a, const StateVector& b) {
  if (a.n != b.n || a.amps.size() != b.amps.size())
    throw std::invalid_argument("fidelity: size mismatch");
  const double na = a.amps.norm();
  const double nb = b.amps.norm();
  if (na < 1e-300 || nb < 1e-300)
    throw std::invalid_argument("fidelity: zero-norm state");
  double value = std::abs(a.amps.dot(b.amps)) / (na * nb);
  return std::min(value, 1.0);  // clip rounding overshoot
}

} // namespace seqgen
