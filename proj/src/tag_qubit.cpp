#include <seqgen/tag_qubit.hpp>

#include <seqgen/linalg.hpp>

#include <numbers>
#include <stdexcept>

namespace seqgen {

CMatrix d_standard_map(Index d_prime) {
  if (d_prime < 1) throw std::invalid_argument("d_standard_map: d_prime must be >= 1");
  CMatrix swap_tb = CMatrix::Zero(4, 4);
  for (Index t = 0; t < 2; ++t)
    for (Index b = 0; b < 2; ++b) swap_tb(b * 2 + t, t * 2 + b) = 1.0;
  return kron(CMatrix::Identity(d_prime, d_prime), swap_tb);
}

CMatrix iso_from_atomic_unitary(const CMatrix& u_atom, double tol) {
  const Index dim = u_atom.rows();
  if (dim != u_atom.cols() || dim % 2 != 0 || dim == 0)
    throw std::invalid_argument("iso_from_atomic_unitary: expected a square even-dimensional matrix");
  if (!is_isometry(u_atom, tol).isometric)
    throw std::invalid_argument("iso_from_atomic_unitary: not unitary");
  const Index d_prime = dim / 2;

  // Compose the defining sequence literally: prepare |0>_T, apply U_A,
  // append |0>_B, swap tag with time-bin, read out <0|_T.
  CMatrix prep_tag = CMatrix::Zero(dim, d_prime);
  for (Index a = 0; a < d_prime; ++a) prep_tag(a * 2, a) = 1.0;
  CMatrix append_bin = CMatrix::Zero(2 * dim, dim);
  for (Index m = 0; m < dim; ++m) append_bin(m * 2, m) = 1.0;
  CMatrix project_tag = CMatrix::Zero(dim, 2 * dim);
  for (Index a = 0; a < d_prime; ++a)
    for (Index b = 0; b < 2; ++b) project_tag(a * 2 + b, a * 4 + b) = 1.0;

  return project_tag * d_standard_map(d_prime) * append_bin * u_atom * prep_tag;
}

CMatrix atomic_unitary_from_iso(const CMatrix& v, double tol) {
  const Index dim = v.rows();
  if (dim != 2 * v.cols() || dim == 0)
    throw std::invalid_argument("atomic_unitary_from_iso: expected a (2d) x d matrix");
  if (!is_isometry(v, tol).isometric)
    throw std::invalid_argument("atomic_unitary_from_iso: not an isometry");
  const Index d_prime = v.cols();

  CMatrix full = complete_to_unitary(v, tol);
  CMatrix u_atom(dim, dim);
  for (Index a = 0; a < d_prime; ++a) {
    u_atom.col(a * 2) = full.col(a);            // |0>_T inputs carry V
    u_atom.col(a * 2 + 1) = full.col(d_prime + a);  // completion on |1>_T inputs
  }
  return u_atom;
}

CMatrix sqrt_swap() {
  CMatrix g = CMatrix::Zero(4, 4);
  g(0, 3) = std::numbers::pi / 4.0;
  g(3, 0) = std::numbers::pi / 4.0;
  return exp_minus_iG(g);
}

} // namespace seqgen
