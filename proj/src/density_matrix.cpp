#include "qcorr/density_matrix.hpp"

#include <cmath>
#include <string>

#include "qcorr/errors.hpp"
#include "qcorr/linalg.hpp"

namespace qcorr {

DensityMatrix::DensityMatrix(CMatrix data, int dim_a, int dim_b)
    : data_(std::move(data)), dim_a_(dim_a), dim_b_(dim_b) {
  if (dim_a < 1 || dim_b < 1)
    throw DimensionError("subsystem dimensions must be positive");
  if (data_.rows() != data_.cols() || data_.rows() != static_cast<Eigen::Index>(dim_a) * dim_b)
    throw DimensionError("matrix is " + std::to_string(data_.rows()) + "x" +
                         std::to_string(data_.cols()) + ", expected " +
                         std::to_string(dim_a * dim_b) + " square for bipartition (" +
                         std::to_string(dim_a) + "," + std::to_string(dim_b) + ")");
}

DensityMatrix DensityMatrix::reinterpret(int dim_a, int dim_b) const {
  if (dim_a < 1 || dim_b < 1 || dim_a * dim_b != dim())
    throw DimensionError("cannot view a " + std::to_string(dim()) + "-dimensional state as " +
                         std::to_string(dim_a) + "x" + std::to_string(dim_b));
  return DensityMatrix(data_, dim_a, dim_b);
}

ValidationReport validate(const DensityMatrix& rho) {
  const CMatrix& d = rho.data();
  ValidationReport r{};
  r.hermiticity_defect = (d - d.adjoint()).cwiseAbs().maxCoeff();
  r.trace_defect = std::abs(d.trace() - Complex(1.0, 0.0));
  // Eigenvalues of the Hermitian part; the defect above covers the rest.
  r.min_eigenvalue = linalg::min_eigenvalue(0.5 * (d + d.adjoint()));
  return r;
}

}  // namespace qcorr
