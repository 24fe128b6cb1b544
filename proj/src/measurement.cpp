#include "qcorr/measurement.hpp"

#include <algorithm>
#include <cmath>

#include "qcorr/errors.hpp"
#include "qcorr/linalg.hpp"

namespace qcorr {

double ProjectorDefects::worst() const noexcept {
  return std::max({hermiticity, idempotence, orthogonality, completeness, rank});
}

ProjectorDefects projector_defects(std::span<const CMatrix> projectors) {
  ProjectorDefects d;
  if (projectors.empty()) return d;
  const Eigen::Index m = projectors.front().rows();
  CMatrix sum = CMatrix::Zero(m, m);
  for (std::size_t j = 0; j < projectors.size(); ++j) {
    const CMatrix& p = projectors[j];
    d.hermiticity = std::max(d.hermiticity, (p - p.adjoint()).cwiseAbs().maxCoeff());
    d.idempotence = std::max(d.idempotence, (p * p - p).cwiseAbs().maxCoeff());
    d.rank = std::max(d.rank, std::abs(p.trace() - Complex(1.0, 0.0)));
    for (std::size_t k = j + 1; k < projectors.size(); ++k)
      d.orthogonality = std::max(d.orthogonality, (p * projectors[k]).cwiseAbs().maxCoeff());
    sum += p;
  }
  d.completeness = (sum - CMatrix::Identity(m, m)).cwiseAbs().maxCoeff();
  return d;
}

Measurement Measurement::from_basis(CMatrix basis, double tol) {
  if (basis.rows() != basis.cols() || basis.rows() == 0)
    throw DimensionError("measurement basis must be a non-empty square matrix");
  const double defect =
      (basis.adjoint() * basis - CMatrix::Identity(basis.rows(), basis.cols())).cwiseAbs().maxCoeff();
  if (defect > tol) throw DimensionError("measurement basis is not orthonormal");
  return Measurement(std::move(basis));
}

Measurement Measurement::from_projectors(std::span<const CMatrix> projectors, double tol) {
  if (projectors.empty()) throw DimensionError("empty projector set");
  const Eigen::Index m = projectors.front().rows();
  if (static_cast<Eigen::Index>(projectors.size()) != m)
    throw DimensionError("a complete rank-1 measurement needs exactly dim projectors");
  for (const auto& p : projectors)
    if (p.rows() != m || p.cols() != m) throw DimensionError("projector dimensions disagree");
  if (projector_defects(projectors).worst() > tol)
    throw DimensionError("operators are not orthogonal rank-1 projectors");

  CMatrix basis(m, m);
  for (Eigen::Index k = 0; k < m; ++k) {
    const auto eig = linalg::eigh_descending(CMatrix(0.5 * (projectors[k] + projectors[k].adjoint())));
    basis.col(k) = eig.vectors.col(0);
  }
  // Re-orthonormalize away the tolerance-level slack.
  Eigen::HouseholderQR<CMatrix> qr(basis);
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < m; ++k) {
    const Complex d = r(k, k);
    if (std::abs(d) > 0) q.col(k) *= d / std::abs(d);
  }
  return Measurement(std::move(q));
}

Measurement Measurement::complete(const CMatrix& leading, double tol) {
  const Eigen::Index m = leading.rows();
  const Eigen::Index k = leading.cols();
  if (k > m || m == 0) throw DimensionError("too many leading vectors");
  if ((leading.adjoint() * leading - CMatrix::Identity(k, k)).cwiseAbs().maxCoeff() > tol)
    throw DimensionError("leading vectors are not orthonormal");
  CMatrix q = Eigen::HouseholderQR<CMatrix>(leading).householderQ();
  q.leftCols(k) = leading;
  return Measurement(std::move(q));
}

Measurement Measurement::computational(int m) {
  if (m < 1) throw DimensionError("measurement dimension must be positive");
  return Measurement(CMatrix::Identity(m, m));
}

CMatrix Measurement::projector(int k) const { return basis_.col(k) * basis_.col(k).adjoint(); }

std::vector<CMatrix> Measurement::projectors() const {
  std::vector<CMatrix> out;
  out.reserve(dim());
  for (int k = 0; k < dim(); ++k) out.push_back(projector(k));
  return out;
}

}  // namespace qcorr
