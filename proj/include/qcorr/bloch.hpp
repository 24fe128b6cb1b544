#pragma once

#include <memory>
#include <vector>

#include "qcorr/density_matrix.hpp"

namespace qcorr::bloch {

/// Generalized Gell-Mann matrices of SU(d), normalized Tr(mu_i mu_j) = 2 delta_ij.
/// Order: symmetric pairs (j<k), antisymmetric pairs (j<k), then the d-1
/// diagonal generators.
struct GeneratorBasis {
  int dim;
  std::vector<CMatrix> matrices;
};

/// Cached per dimension; safe to call concurrently.
std::shared_ptr<const GeneratorBasis> generators(int d);

/// rho = (1/mn) [ I (x) I + x.mu (x) I + I (x) y.nu + sum T_ij mu_i (x) nu_j ].
struct BlochForm {
  int dim_a;
  int dim_b;
  RVector x;  // m^2 - 1
  RVector y;  // n^2 - 1
  RMatrix t;  // (m^2 - 1) x (n^2 - 1)
};

/// Throws DomainError if the traces carry an imaginary part above 1e-9
/// (non-Hermitian input).
BlochForm decompose(const DensityMatrix& rho);

/// Assembles the matrix from its Bloch coefficients. The result need not be PSD.
DensityMatrix reconstruct(const BlochForm& bf);

/// G = x x^t + (2/n) T T^t, symmetrized.
RMatrix gram(const BlochForm& bf);

/// Bloch vector of an m x m Hermitian operator: A = Tr(A)/m I + (1/2) v.mu.
RVector local_vector(const CMatrix& op);
/// Inverse of local_vector for a given trace.
CMatrix local_operator(const RVector& v, double trace);

}  // namespace qcorr::bloch
