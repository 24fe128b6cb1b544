#pragma once

// Internal fast path for the normalized measurement distance, shared by the
// exact measures and the samplers.

#include "qcorr/density_matrix.hpp"

namespace qcorr::detail {

/// Throws UnsupportedDimension when dim_a > dim_b.
void require_a_not_larger(const DensityMatrix& rho);

/// (m/(m-1)) (||rho||^2 - sum_k ||(<v_k| (x) I) rho (|v_k> (x) I)||^2) for the
/// orthonormal columns v_k of basis. scratch is resized as needed.
double distance_from_basis(const DensityMatrix& rho, const CMatrix& basis, CMatrix& scratch);

}  // namespace qcorr::detail
