#pragma once

#include <Eigen/Dense>

namespace qcorr {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

namespace tol {
inline constexpr double kHermitian = 1e-12;
inline constexpr double kTrace = 1e-12;
/// Smallest eigenvalue still accepted as positive semidefinite.
inline constexpr double kPsd = -1e-10;
/// Relative eigenvalue gap below which two marginal eigenvalues are merged.
inline constexpr double kDegeneracy = 1e-9;
inline constexpr double kProjector = 1e-10;
}  // namespace tol

/// Bipartite density matrix on C^m (x) C^n, stored in the product basis
/// |i>|j> -> i*n + j.
///
/// Construction only checks the shape; use validate() for the physical
/// invariants.
class DensityMatrix {
 public:
  DensityMatrix(CMatrix data, int dim_a, int dim_b);

  const CMatrix& data() const noexcept { return data_; }
  int dim_a() const noexcept { return dim_a_; }
  int dim_b() const noexcept { return dim_b_; }
  int dim() const noexcept { return dim_a_ * dim_b_; }

  /// Same matrix, new bipartition (m2, n2) with m2*n2 == m*n.
  DensityMatrix reinterpret(int dim_a, int dim_b) const;

 private:
  CMatrix data_;
  int dim_a_;
  int dim_b_;
};

struct ValidationReport {
  double hermiticity_defect;  // max |rho - rho^dagger|
  double trace_defect;        // |Tr rho - 1|
  double min_eigenvalue;

  bool ok() const noexcept {
    return hermiticity_defect <= tol::kHermitian && trace_defect <= tol::kTrace &&
           min_eigenvalue >= tol::kPsd;
  }
};

ValidationReport validate(const DensityMatrix& rho);

}  // namespace qcorr
