#include "qcorr/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace qcorr::linalg {

HermitianEigen eigh_descending(const CMatrix& h) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h);
  const Eigen::Index n = h.rows();
  HermitianEigen out{RVector(n), CMatrix(n, n)};
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values(k) = solver.eigenvalues()(n - 1 - k);
    out.vectors.col(k) = solver.eigenvectors().col(n - 1 - k);
  }
  return out;
}

SymmetricEigen eigh_descending(const RMatrix& s) {
  Eigen::SelfAdjointEigenSolver<RMatrix> solver(s);
  const Eigen::Index n = s.rows();
  SymmetricEigen out{RVector(n), RMatrix(n, n)};
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values(k) = solver.eigenvalues()(n - 1 - k);
    out.vectors.col(k) = solver.eigenvectors().col(n - 1 - k);
  }
  return out;
}

double min_eigenvalue(const CMatrix& h) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0);
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

CMatrix partial_trace_b(const CMatrix& rho, int dim_a, int dim_b) {
  CMatrix out = CMatrix::Zero(dim_a, dim_a);
  for (int i = 0; i < dim_a; ++i)
    for (int j = 0; j < dim_a; ++j) out(i, j) = rho.block(i * dim_b, j * dim_b, dim_b, dim_b).trace();
  return out;
}

CMatrix partial_trace_a(const CMatrix& rho, int dim_a, int dim_b) {
  CMatrix out = CMatrix::Zero(dim_b, dim_b);
  for (int i = 0; i < dim_a; ++i) out += rho.block(i * dim_b, i * dim_b, dim_b, dim_b);
  return out;
}

double hs_norm_squared(const CMatrix& a) { return a.squaredNorm(); }

std::vector<EigenGroup> group_eigenvalues(const RVector& descending, double rel_tol) {
  std::vector<EigenGroup> groups;
  if (descending.size() == 0) return groups;
  const double scale = std::max(descending.cwiseAbs().maxCoeff(), 1e-300);
  int first = 0;
  for (int k = 1; k <= descending.size(); ++k) {
    if (k == descending.size() || descending(k - 1) - descending(k) >= rel_tol * scale) {
      const int size = k - first;
      groups.push_back({descending.segment(first, size).mean(), first, size});
      first = k;
    }
  }
  return groups;
}

CMatrix unitary_exp(const CMatrix& h) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h);
  const Eigen::VectorXcd phases =
      solver.eigenvalues().unaryExpr([](double x) { return std::polar(1.0, x); });
  return solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
}

}  // namespace qcorr::linalg
