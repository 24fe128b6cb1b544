#pragma once

#include <vector>

#include "qcorr/density_matrix.hpp"

// Factories for the bipartite states studied here. Every factory throws
// DomainError when a parameter is out of range.
namespace qcorr::states {

/// P. Horodecki's 2x4 family, a in [0, 1]; bound entangled for 0 < a < 1.
DensityMatrix horodecki_2x4(double a);

/// Horodeckis' 3x3 family (2/7)|Phi><Phi| + (beta/7) s+ + ((5-beta)/7) s-,
/// beta in [0, 5].
DensityMatrix horodecki_3x3(double beta);

/// 4x4 bound entangled state with positive distillable key, written in the
/// computational basis with entries s = sqrt2 / (8 (1 + sqrt2)) and
/// t = 1 / (4 (1 + sqrt2)).
DensityMatrix horodecki_4x4_key();

/// Normalized projector onto the complement of the Pyramid UPB.
DensityMatrix upb_pyramid();
/// Normalized projector onto the complement of the Tiles UPB.
DensityMatrix upb_tiles();

/// Benatti et al. 4x4 bound entangled state.
DensityMatrix benatti_4x4();

/// m x m Werner state, z in [-1, 1].
DensityMatrix werner(int m, double z);
/// m x m isotropic state, z in [0, 1].
DensityMatrix isotropic(int m, double z);

/// The five product vectors of each UPB, each of length 9.
std::vector<CVector> pyramid_upb();
std::vector<CVector> tiles_upb();

}  // namespace qcorr::states

namespace qcorr {

inline DensityMatrix reinterpret(const DensityMatrix& rho, int dim_a, int dim_b) {
  return rho.reinterpret(dim_a, dim_b);
}

}  // namespace qcorr
