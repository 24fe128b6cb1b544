#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "qcorr/density_matrix.hpp"
#include "qcorr/measurement.hpp"

namespace qcorr {

struct StateSpec;

enum class EstimateKind { Exact, LowerBound, UpperBound, Sampled };

std::string_view kind_name(EstimateKind k);

/// Value of geometric discord (GD) or measurement-induced nonlocality (MIN).
/// Values are never clamped here so that bound violations stay visible.
struct MeasureEstimate {
  double value = 0.0;
  EstimateKind kind = EstimateKind::Exact;
  std::optional<Measurement> witness;
};

/// Pi(rho) = sum_k (P_k (x) I) rho (P_k (x) I).
CMatrix apply_measurement(const DensityMatrix& rho, const Measurement& meas);

/// (m/(m-1)) ||rho - Pi(rho)||^2 in the Hilbert-Schmidt norm.
///
/// Uses ||rho - Pi(rho)||^2 = ||rho||^2 - sum_k ||<v_k|rho|v_k>_A||^2, which
/// never forms Pi(rho). Requires dim_a <= dim_b.
double normalized_distance(const DensityMatrix& rho, const Measurement& meas);

/// Eigenvalue lower bound on GD from G = x x^t + (2/n) T T^t.
MeasureEstimate gd_lower_bound(const DensityMatrix& rho);

/// Eigenvalue upper bound on MIN from T T^t.
MeasureEstimate min_upper_bound(const DensityMatrix& rho);

/// Exact GD of a 2 x n state; the witness is built from the top eigenvector
/// of G. Throws UnsupportedDimension unless dim_a == 2.
MeasureEstimate gd_exact_2xn(const DensityMatrix& rho);

/// Exact GD of a 3 x n state when the projectors assembled from the top two
/// eigenvectors of G are a legitimate measurement; nullopt otherwise. When
/// the top two eigenvalues coincide (and the plane they span is unique) the
/// orthonormal pair is rotated within that plane before giving up.
std::optional<MeasureEstimate> gd_candidate_3x3(const DensityMatrix& rho);

/// Tr_B rho.
CMatrix marginal(const DensityMatrix& rho);

/// True iff sum_k P_k rho_a P_k == rho_a within 1e-9.
bool preserves_marginal(const Measurement& meas, const CMatrix& rho_a);

/// Eigenspaces of the marginal rho^A, grouped with the degeneracy tolerance.
struct Eigenspace {
  double value;
  CMatrix basis;  // m x multiplicity, orthonormal columns
};
std::vector<Eigenspace> marginal_eigenspaces(const DensityMatrix& rho);

/// Exact MIN when rho^A is non-degenerate. Throws DegenerateMarginal otherwise.
MeasureEstimate min_exact_nondegenerate(const DensityMatrix& rho);

/// MIN problem when rho^A has exactly one doubly degenerate eigenvalue.
///
/// Inside the 2-d eigenspace the measurement is P_{1,2} = (I_2 +- u.sigma)/2
/// for a unit vector u; all other outcomes are the remaining eigenprojectors.
/// The normalized distance is a quadratic form u^t Q u on the unit sphere,
/// recovered from nine evaluations by polarization.
class DegenerateBlockProblem {
 public:
  /// Throws DegenerateMarginal if the spectrum does not match. block_basis,
  /// when given, fixes the coordinates of u: it must be an orthonormal basis
  /// (m x 2) of the degenerate eigenspace.
  explicit DegenerateBlockProblem(const DensityMatrix& rho,
                                  std::optional<CMatrix> block_basis = std::nullopt);

  Measurement measurement(const Eigen::Vector3d& u) const;
  double distance(const Eigen::Vector3d& u) const;
  /// u^t Q u for unit u.
  double predicted(const Eigen::Vector3d& u) const;
  const Eigen::Matrix3d& quadratic_form() const noexcept { return q_; }
  /// Orthonormal basis of the degenerate eigenspace (m x 2).
  const CMatrix& block_basis() const noexcept { return block_; }

  MeasureEstimate solve() const;

 private:
  DensityMatrix rho_;
  CMatrix block_;
  CMatrix rest_;
  Eigen::Matrix3d q_;
};

MeasureEstimate min_exact_2d_block(const DensityMatrix& rho);

/// Dispatches to the applicable exact MIN operation; nullopt when neither
/// applies (e.g. a three-fold degenerate marginal).
std::optional<MeasureEstimate> min_exact(const DensityMatrix& rho);

/// Published closed-form GD and MIN values, looked up by family. Independent
/// of the numerical machinery above.
struct ClosedForms {
  MeasureEstimate gd;
  MeasureEstimate min;
};
std::optional<ClosedForms> closed_forms(const StateSpec& spec);

}  // namespace qcorr
