#pragma once

#include <vector>

#include "qcorr/density_matrix.hpp"

namespace qcorr::linalg {

/// Eigen-decomposition of a Hermitian matrix, eigenvalues in descending order.
struct HermitianEigen {
  RVector values;
  CMatrix vectors;  // column k belongs to values[k]
};

HermitianEigen eigh_descending(const CMatrix& h);

/// Real symmetric variant, descending.
struct SymmetricEigen {
  RVector values;
  RMatrix vectors;
};

SymmetricEigen eigh_descending(const RMatrix& s);

/// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const CMatrix& h);

CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Tr_B of an (m n) x (m n) matrix.
CMatrix partial_trace_b(const CMatrix& rho, int dim_a, int dim_b);
/// Tr_A of an (m n) x (m n) matrix.
CMatrix partial_trace_a(const CMatrix& rho, int dim_a, int dim_b);

/// Tr(A^dagger A).
double hs_norm_squared(const CMatrix& a);

/// Groups of (descending) eigenvalues whose neighbours differ by less than
/// rel_tol times the spectral scale max(|lambda|).
struct EigenGroup {
  double value;  // mean of the group
  int first;     // index into the descending spectrum
  int size;
};

std::vector<EigenGroup> group_eigenvalues(const RVector& descending, double rel_tol);

/// exp(i * h) for Hermitian h.
CMatrix unitary_exp(const CMatrix& h);

}  // namespace qcorr::linalg
