#pragma once

#include <span>
#include <vector>

#include "qcorr/density_matrix.hpp"

namespace qcorr {

struct ProjectorDefects {
  double hermiticity = 0.0;    // max |P - P^dagger|
  double idempotence = 0.0;    // max |P^2 - P|
  double orthogonality = 0.0;  // max |P_j P_k|, j != k
  double completeness = 0.0;   // max |sum P - I|
  double rank = 0.0;           // max |Tr P - 1|

  double worst() const noexcept;
};

ProjectorDefects projector_defects(std::span<const CMatrix> projectors);

/// Complete von Neumann measurement by rank-1 projectors on C^m, held as an
/// orthonormal basis (one column per outcome).
class Measurement {
 public:
  /// Throws DimensionError if basis is not square and unitary to tol.
  static Measurement from_basis(CMatrix basis, double tol = tol::kProjector);

  /// Validates the projectors (Hermitian, idempotent, rank 1, orthogonal,
  /// complete) and extracts their ranges. Throws DimensionError on failure.
  static Measurement from_projectors(std::span<const CMatrix> projectors,
                                     double tol = tol::kProjector);

  /// Completes a set of orthonormal vectors (columns) to a basis. The given
  /// vectors are kept as the leading outcomes.
  static Measurement complete(const CMatrix& leading, double tol = tol::kProjector);

  static Measurement computational(int m);

  int dim() const noexcept { return static_cast<int>(basis_.cols()); }
  const CMatrix& basis() const noexcept { return basis_; }
  CMatrix projector(int k) const;
  std::vector<CMatrix> projectors() const;

 private:
  explicit Measurement(CMatrix basis) : basis_(std::move(basis)) {}
  CMatrix basis_;
};

}  // namespace qcorr
