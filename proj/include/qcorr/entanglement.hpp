#pragma once

#include <string_view>

#include "qcorr/density_matrix.hpp"

namespace qcorr {

enum class Side { A, B };

CMatrix partial_transpose(const DensityMatrix& rho, Side side = Side::B);

/// Min eigenvalue of the partial transpose >= -1e-10.
bool is_ppt(const DensityMatrix& rho);

/// Sum of |negative eigenvalues| of the partial transpose.
double negativity(const DensityMatrix& rho);

/// Known regimes of the 3x3 Horodecki family (separability labels are
/// literature values, not computed).
enum class Regime {
  NptEntangled,    // [0, 1)
  PptUnknown,      // [1, 2)
  Separable,       // [2, 3]
  BoundEntangled,  // (3, 4]
  FreeEntangled,   // (4, 5]
};

std::string_view regime_name(Regime r);
bool regime_is_ppt(Regime r);

/// Throws DomainError outside [0, 5]; throws std::logic_error if the label
/// disagrees with is_ppt on the constructed state.
Regime classify_horodecki_3x3(double beta);

}  // namespace qcorr
