#include <seqgen/mps.hpp>

#include <seqgen/linalg.hpp>

#include <random>
#include <stdexcept>
#include <string>

namespace seqgen {

void validate_mps(const MPSState& m) {
  if (m.sites.empty()) throw std::invalid_argument("mps: needs at least one site");
  if (m.phi_I.size() < 1 || m.phi_F.size() < 1)
    throw std::invalid_argument("mps: boundary vectors must have dimension >= 1");
  Index prev = m.phi_I.size();
  for (std::size_t k = 0; k < m.sites.size(); ++k) {
    const auto& [v0, v1] = m.sites[k];
    if (v0.rows() != v1.rows() || v0.cols() != v1.cols())
      throw std::invalid_argument("mps: site " + std::to_string(k + 1) +
                                  " tensor pair shapes differ");
    if (v0.rows() < 1 || v0.cols() != prev)
      throw std::invalid_argument("mps: site " + std::to_string(k + 1) +
                                  " does not chain with previous bond");
    if (!v0.allFinite() || !v1.allFinite())
      throw std::invalid_argument("mps: non-finite entry at site " + std::to_string(k + 1));
    prev = v0.rows();
  }
  if (prev != m.phi_F.size())
    throw std::invalid_argument("mps: phi_F dimension does not match last bond");
}

std::vector<Index> bond_dimensions(const MPSState& m) {
  std::vector<Index> dims;
  dims.reserve(m.sites.size() + 1);
  dims.push_back(m.phi_I.size());
  for (const auto& site : m.sites) dims.push_back(site[0].rows());
  return dims;
}

StateVector mps_evaluate(const MPSState& m) {
  validate_mps(m);
  const int n = m.n();

  // R has one column per emitted bit string; appending site k doubles the
  // column count, with the new bit i_k as the high bit.
  CMatrix r = m.phi_I;
  for (const auto& [v0, v1] : m.sites) {
    CMatrix next(v0.rows(), 2 * r.cols());
    next.leftCols(r.cols()).noalias() = v0 * r;
    next.rightCols(r.cols()).noalias() = v1 * r;
    r.swap(next);
  }

  CVector amps = (m.phi_F.adjoint() * r).transpose();
  StateVector out = make_state(n, std::move(amps));
  out.unnormalized = std::abs(out.amps.norm() - 1.0) > 1e-10;
  return out;
}

MPSState state_to_mps(const StateVector& psi, double rank_tol, bool allow_unnormalized) {
  if (psi.amps.size() != (Index{1} << psi.n) || psi.n < 1)
    throw std::invalid_argument("state_to_mps: malformed state");
  const double nrm = psi.amps.norm();
  if (nrm < 1e-300) throw std::invalid_argument("state_to_mps: zero state");
  if (!allow_unnormalized && std::abs(nrm - 1.0) > 1e-10)
    throw std::invalid_argument("state_to_mps: state not normalized");

  MPSState out;
  out.sites.resize(psi.n);
  out.phi_F = CVector::Ones(1);

  // Peel off sites from the last-emitted qubit down. The remainder r is
  // D_k x 2^k; moving bit k-1 to the row side and taking a thin SVD leaves
  // the site tensor in U and the next remainder in sigma * Wdag.
  CMatrix r = psi.amps.transpose();  // 1 x 2^n
  for (int k = psi.n; k >= 1; --k) {
    const Index dk = r.rows();
    const Index half = r.cols() / 2;
    CMatrix b(2 * dk, half);
    b.topRows(dk) = r.leftCols(half);
    b.bottomRows(dk) = r.rightCols(half);

    SVDResult dec = svd(b, rank_tol);
    out.sites[k - 1] = {dec.U.topRows(dk), dec.U.bottomRows(dk)};
    r = dec.sigma.asDiagonal() * dec.Wdag;
  }
  out.phi_I = r.col(0);  // 1 x 1 remainder carries norm and global phase
  return out;
}

MPSState random_mps(int n, Index D, std::uint64_t seed) {
  if (n < 1 || D < 1) throw std::invalid_argument("random_mps: n and D must be >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto draw = [&] { return Complex(gauss(rng), gauss(rng)); };

  auto draw_matrix = [&](Index rows, Index cols) {
    CMatrix m(rows, cols);
    for (Index i = 0; i < rows; ++i)
      for (Index j = 0; j < cols; ++j) m(i, j) = draw();
    return m;
  };

  MPSState out;
  out.sites.resize(n);
  for (auto& [v0, v1] : out.sites) {
    v0 = draw_matrix(D, D);
    v1 = draw_matrix(D, D);
  }
  out.phi_I = draw_matrix(D, 1);
  out.phi_F = draw_matrix(D, 1);
  return out;
}

} // namespace seqgen
