#include <seqgen/linalg.hpp>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <stdexcept>

namespace seqgen {

SVDResult svd(const CMatrix& a, double rank_tol) {
  if (a.rows() == 0 || a.cols() == 0)
    throw std::invalid_argument("svd: empty matrix");
  if (!a.allFinite()) throw std::invalid_argument("svd: invalid matrix");
  if (a.cwiseAbs().maxCoeff() == 0.0) throw std::invalid_argument("svd: zero input");
  if (!(rank_tol > 0.0 && rank_tol < 1.0))
    throw std::invalid_argument("svd: rank_tol must be in (0,1)");

  Eigen::JacobiSVD<CMatrix> dec(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const RVector& s = dec.singularValues();
  const double cutoff = rank_tol * s(0);
  Index r = 0;
  while (r < s.size() && s(r) > cutoff) ++r;
  if (r == 0) throw std::invalid_argument("svd: zero input");

  SVDResult out;
  out.U = dec.matrixU().leftCols(r);
  out.sigma = s.head(r);
  out.Wdag = dec.matrixV().leftCols(r).adjoint();
  out.rank = r;

  // Phase convention: first nonzero component of each U column made real
  // non-negative, compensated in the matching Wdag row.
  for (Index j = 0; j < r; ++j) {
    for (Index i = 0; i < out.U.rows(); ++i) {
      const Complex u = out.U(i, j);
      if (std::abs(u) > 1e-12) {
        const Complex phase = std::abs(u) / u;
        out.U.col(j) *= phase;
        out.Wdag.row(j) *= std::conj(phase);
        break;
      }
    }
  }
  return out;
}

CMatrix complete_to_unitary(const CMatrix& v, double tol) {
  const Index m = v.rows();
  const Index k = v.cols();
  if (k > m) throw std::invalid_argument("complete_to_unitary: more columns than rows");
  if (!is_isometry(v, tol).isometric)
    throw std::invalid_argument("complete_to_unitary: not an isometry");
  if (k == m) return v;
  if (k == 0) return CMatrix::Identity(m, m);

  CMatrix result(m, m);
  result.leftCols(k) = v;

  // Candidate complement from the full Householder Q, then two rounds of
  // Gram-Schmidt against V and the columns accepted so far.
  Eigen::HouseholderQR<CMatrix> qr(v);
  CMatrix q = qr.householderQ();
  Index filled = k;
  for (Index c = 0; c < m && filled < m; ++c) {
    CVector w = q.col(m - 1 - c);
    for (int pass = 0; pass < 2; ++pass)
      for (Index j = 0; j < filled; ++j)
        w -= result.col(j).dot(w) * result.col(j);
    const double nrm = w.norm();
    if (nrm > 0.5) result.col(filled++) = w / nrm;
  }
  if (filled < m)
    throw std::runtime_error("complete_to_unitary: failed to build complement");
  return result;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

CMatrix exp_minus_iG(const CMatrix& g, double herm_tol) {
  if (g.rows() != g.cols()) throw std::invalid_argument("exp_minus_iG: not square");
  if (g.rows() > 16) throw std::invalid_argument("exp_minus_iG: dimension capped at 16");
  if ((g - g.adjoint()).cwiseAbs().maxCoeff() > herm_tol)
    throw std::invalid_argument("exp_minus_iG: not Hermitian");

  Eigen::SelfAdjointEigenSolver<CMatrix> eig((g + g.adjoint()) / 2.0);
  const RVector& lam = eig.eigenvalues();
  CVector ph(lam.size());
  for (Index i = 0; i < lam.size(); ++i)
    ph(i) = std::exp(Complex(0.0, -lam(i)));
  return eig.eigenvectors() * ph.asDiagonal() * eig.eigenvectors().adjoint();
}

IsometryCheck is_isometry(const CMatrix& v, double tol) {
  if (v.rows() < v.cols())
    throw std::invalid_argument("is_isometry: cannot be isometric (rows < cols)");
  if (v.cols() == 0) return IsometryCheck{true, 0.0};
  CMatrix gram = v.adjoint() * v;
  gram.diagonal().array() -= 1.0;
  const double residual = gram.cwiseAbs().maxCoeff();
  return IsometryCheck{residual <= tol, residual};
}

} // namespace seqgen
