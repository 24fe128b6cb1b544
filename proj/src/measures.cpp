#include "qcorr/measures.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "distance.hpp"
#include "qcorr/bloch.hpp"
#include "qcorr/errors.hpp"
#include "qcorr/linalg.hpp"
#include "qcorr/state_spec.hpp"

namespace qcorr {

namespace detail {

void require_a_not_larger(const DensityMatrix& rho) {
  if (rho.dim_a() > rho.dim_b())
    throw UnsupportedDimension("measures are defined for dim_a <= dim_b, got " +
                               std::to_string(rho.dim_a()) + "x" + std::to_string(rho.dim_b()));
  if (rho.dim_a() < 2) throw UnsupportedDimension("measures need dim_a >= 2");
}

double distance_from_basis(const DensityMatrix& rho, const CMatrix& basis, CMatrix& scratch) {
  const int m = rho.dim_a();
  const int n = rho.dim_b();
  const CMatrix& data = rho.data();
  double kept = 0.0;
  scratch.resize(n, n);
  for (int k = 0; k < m; ++k) {
    scratch.setZero();
    for (int i = 0; i < m; ++i) {
      const Complex vi = std::conj(basis(i, k));
      for (int j = 0; j < m; ++j) {
        const Complex w = vi * basis(j, k);
        if (w != Complex(0.0, 0.0)) scratch.noalias() += w * data.block(i * n, j * n, n, n);
      }
    }
    kept += scratch.squaredNorm();
  }
  return (static_cast<double>(m) / (m - 1)) * (data.squaredNorm() - kept);
}

}  // namespace detail

namespace {

constexpr double kCandidateTol = 1e-8;
constexpr double kMarginalTol = 1e-9;

void require_measurement_dim(const DensityMatrix& rho, const Measurement& meas) {
  if (meas.dim() != rho.dim_a())
    throw DimensionError("measurement acts on C^" + std::to_string(meas.dim()) +
                         " but subsystem A is C^" + std::to_string(rho.dim_a()));
}

double sum_top(const RVector& descending, int count) {
  count = std::min<int>(count, static_cast<int>(descending.size()));
  return count > 0 ? descending.head(count).sum() : 0.0;
}

// Qutrit projectors built from an orthonormal pair (e1, e2) of Bloch vectors:
// P1,2 = I/3 + (1/2)(+-e1 + e2/sqrt3).mu, P3 = I - P1 - P2.
std::array<CMatrix, 3> candidate_projectors(const RVector& e1, const RVector& e2) {
  const CMatrix p1 = bloch::local_operator(e1 + e2 / std::sqrt(3.0), 1.0);
  const CMatrix p2 = bloch::local_operator(-e1 + e2 / std::sqrt(3.0), 1.0);
  const CMatrix p3 = CMatrix::Identity(3, 3) - p1 - p2;
  return {p1, p2, p3};
}

double candidate_defect(const RVector& e1, const RVector& e2) {
  const auto p = candidate_projectors(e1, e2);
  return projector_defects(p).worst();
}

// Orientation (angle, reflection) of an orthonormal pair inside a fixed plane
// that makes the candidate projectors legitimate, if any.
std::pair<RVector, RVector> best_orientation(const RVector& a, const RVector& b) {
  auto pair_at = [&](double phi, double s) {
    RVector e1 = std::cos(phi) * a + std::sin(phi) * b;
    RVector e2 = s * (-std::sin(phi) * a + std::cos(phi) * b);
    return std::make_pair(e1, e2);
  };
  auto defect_at = [&](double phi, double s) {
    const auto [e1, e2] = pair_at(phi, s);
    return candidate_defect(e1, e2);
  };

  constexpr int kGrid = 720;
  const double step = 2.0 * std::numbers::pi / kGrid;
  double best_phi = 0.0, best_s = 1.0, best = std::numeric_limits<double>::infinity();
  for (double s : {1.0, -1.0})
    for (int g = 0; g < kGrid; ++g) {
      const double d = defect_at(g * step, s);
      if (d < best) best = d, best_phi = g * step, best_s = s;
    }

  // Golden-section refinement on the bracketing grid cells.
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = best_phi - step, hi = best_phi + step;
  double c = hi - ratio * (hi - lo), d = lo + ratio * (hi - lo);
  double fc = defect_at(c, best_s), fd = defect_at(d, best_s);
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    if (fc < fd) {
      hi = d, d = c, fd = fc;
      c = hi - ratio * (hi - lo), fc = defect_at(c, best_s);
    } else {
      lo = c, c = d, fc = fd;
      d = lo + ratio * (hi - lo), fd = defect_at(d, best_s);
    }
  }
  const double phi = fc < fd ? c : d;
  return defect_at(phi, best_s) < best ? pair_at(phi, best_s) : pair_at(best_phi, best_s);
}

}  // namespace

std::string_view kind_name(EstimateKind k) {
  switch (k) {
    case EstimateKind::Exact:
      return "exact";
    case EstimateKind::LowerBound:
      return "lower-bound";
    case EstimateKind::UpperBound:
      return "upper-bound";
    case EstimateKind::Sampled:
      return "sampled";
  }
  return "?";
}

CMatrix apply_measurement(const DensityMatrix& rho, const Measurement& meas) {
  require_measurement_dim(rho, meas);
  const CMatrix id_b = CMatrix::Identity(rho.dim_b(), rho.dim_b());
  CMatrix out = CMatrix::Zero(rho.dim(), rho.dim());
  for (int k = 0; k < meas.dim(); ++k) {
    const CMatrix p = linalg::kron(meas.projector(k), id_b);
    out += p * rho.data() * p;
  }
  return out;
}

double normalized_distance(const DensityMatrix& rho, const Measurement& meas) {
  detail::require_a_not_larger(rho);
  require_measurement_dim(rho, meas);
  CMatrix scratch;
  return detail::distance_from_basis(rho, meas.basis(), scratch);
}

MeasureEstimate gd_lower_bound(const DensityMatrix& rho) {
  detail::require_a_not_larger(rho);
  const int m = rho.dim_a();
  const int n = rho.dim_b();
  const auto bf = bloch::decompose(rho);
  const auto g = linalg::eigh_descending(bloch::gram(bf));
  const double bracket =
      bf.x.squaredNorm() + (2.0 / n) * bf.t.squaredNorm() - sum_top(g.values, m - 1);
  return {2.0 / (m * (m - 1.0) * n) * bracket, EstimateKind::LowerBound, std::nullopt};
}

MeasureEstimate min_upper_bound(const DensityMatrix& rho) {
  detail::require_a_not_larger(rho);
  const int m = rho.dim_a();
  const int n = rho.dim_b();
  const auto bf = bloch::decompose(rho);
  const RMatrix ttt = bf.t * bf.t.transpose();
  const auto eig = linalg::eigh_descending(RMatrix(0.5 * (ttt + ttt.transpose())));
  const double top = sum_top(eig.values, m * m - m);
  return {4.0 / (m * (m - 1.0) * n * n) * top, EstimateKind::UpperBound, std::nullopt};
}

MeasureEstimate gd_exact_2xn(const DensityMatrix& rho) {
  if (rho.dim_a() != 2)
    throw UnsupportedDimension("gd_exact_2xn needs dim_a == 2, got " + std::to_string(rho.dim_a()));
  MeasureEstimate est = gd_lower_bound(rho);
  est.kind = EstimateKind::Exact;

  const auto g = linalg::eigh_descending(bloch::gram(bloch::decompose(rho)));
  const RVector e = g.vectors.col(0).normalized();
  const std::array<CMatrix, 2> proj{bloch::local_operator(e, 1.0), bloch::local_operator(-e, 1.0)};
  est.witness = Measurement::from_projectors(proj);
  return est;
}

std::optional<MeasureEstimate> gd_candidate_3x3(const DensityMatrix& rho) {
  if (rho.dim_a() != 3)
    throw UnsupportedDimension("gd_candidate_3x3 needs dim_a == 3, got " +
                               std::to_string(rho.dim_a()));
  detail::require_a_not_larger(rho);
  const auto g = linalg::eigh_descending(bloch::gram(bloch::decompose(rho)));
  const RVector a = g.vectors.col(0);
  const RVector b = g.vectors.col(1);

  const double scale = std::max(std::abs(g.values(0)), 1e-300);
  const bool top_pair_tied = g.values(0) - g.values(1) < tol::kDegeneracy * scale;
  const bool plane_unique = g.values(1) - g.values(2) >= tol::kDegeneracy * scale;

  std::vector<std::pair<RVector, RVector>> tries;
  if (top_pair_tied && plane_unique) {
    tries.push_back(best_orientation(a, b));
  } else {
    // Eigenvector signs are arbitrary; only the sign of e2 changes the set.
    tries.emplace_back(a, b);
    tries.emplace_back(a, -b);
  }

  for (const auto& [e1, e2] : tries) {
    const auto p = candidate_projectors(e1, e2);
    if (projector_defects(p).worst() > kCandidateTol) continue;
    MeasureEstimate est = gd_lower_bound(rho);
    est.kind = EstimateKind::Exact;
    est.witness = Measurement::from_projectors(p, kCandidateTol);
    return est;
  }
  return std::nullopt;
}

CMatrix marginal(const DensityMatrix& rho) {
  return linalg::partial_trace_b(rho.data(), rho.dim_a(), rho.dim_b());
}

bool preserves_marginal(const Measurement& meas, const CMatrix& rho_a) {
  if (rho_a.rows() != meas.dim() || rho_a.cols() != meas.dim())
    throw DimensionError("marginal and measurement dimensions differ");
  CMatrix pinched = CMatrix::Zero(rho_a.rows(), rho_a.cols());
  for (int k = 0; k < meas.dim(); ++k) {
    const CMatrix p = meas.projector(k);
    pinched += p * rho_a * p;
  }
  return (pinched - rho_a).cwiseAbs().maxCoeff() <= kMarginalTol;
}

std::vector<Eigenspace> marginal_eigenspaces(const DensityMatrix& rho) {
  const CMatrix rho_a = marginal(rho);
  const auto eig = linalg::eigh_descending(CMatrix(0.5 * (rho_a + rho_a.adjoint())));
  std::vector<Eigenspace> spaces;
  for (const auto& grp : linalg::group_eigenvalues(eig.values, tol::kDegeneracy))
    spaces.push_back({grp.value, eig.vectors.middleCols(grp.first, grp.size)});
  return spaces;
}

MeasureEstimate min_exact_nondegenerate(const DensityMatrix& rho) {
  detail::require_a_not_larger(rho);
  const auto spaces = marginal_eigenspaces(rho);
  if (static_cast<int>(spaces.size()) != rho.dim_a())
    throw DegenerateMarginal(
        "marginal rho^A is degenerate; use min_exact_2d_block or sample_min instead");
  CMatrix basis(rho.dim_a(), rho.dim_a());
  for (std::size_t k = 0; k < spaces.size(); ++k) basis.col(static_cast<Eigen::Index>(k)) = spaces[k].basis;
  auto meas = Measurement::from_basis(std::move(basis));
  const double value = normalized_distance(rho, meas);
  return {value, EstimateKind::Exact, std::move(meas)};
}

DegenerateBlockProblem::DegenerateBlockProblem(const DensityMatrix& rho,
                                               std::optional<CMatrix> block_basis)
    : rho_(rho) {
  detail::require_a_not_larger(rho);
  const auto spaces = marginal_eigenspaces(rho);
  int doubles = 0;
  for (const auto& s : spaces) {
    if (s.basis.cols() == 2) ++doubles;
    if (s.basis.cols() > 2 || doubles > 1)
      throw DegenerateMarginal(
          "min_exact_2d_block needs exactly one doubly degenerate marginal eigenvalue");
  }
  if (doubles != 1)
    throw DegenerateMarginal("marginal has no doubly degenerate eigenvalue");

  rest_.resize(rho.dim_a(), rho.dim_a() - 2);
  Eigen::Index col = 0;
  for (const auto& s : spaces) {
    if (s.basis.cols() == 2)
      block_ = s.basis;
    else
      rest_.col(col++) = s.basis.col(0);
  }

  if (block_basis) {
    const CMatrix& given = *block_basis;
    if (given.rows() != block_.rows() || given.cols() != 2 ||
        (given.adjoint() * given - CMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() > tol::kProjector)
      throw DimensionError("block basis must be m x 2 with orthonormal columns");
    const CMatrix diff = given * given.adjoint() - block_ * block_.adjoint();
    if (diff.cwiseAbs().maxCoeff() > kMarginalTol)
      throw DimensionError("block basis does not span the degenerate eigenspace");
    block_ = given;
  }

  // Polarization: Q_ii from +-e_i, Q_ij from (e_i + e_j)/sqrt2.
  for (int i = 0; i < 3; ++i) {
    const Eigen::Vector3d e = Eigen::Vector3d::Unit(i);
    q_(i, i) = 0.5 * (distance(e) + distance(-e));
  }
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      const Eigen::Vector3d mixed =
          (Eigen::Vector3d::Unit(i) + Eigen::Vector3d::Unit(j)) / std::numbers::sqrt2;
      q_(i, j) = q_(j, i) = distance(mixed) - 0.5 * (q_(i, i) + q_(j, j));
    }
}

Measurement DegenerateBlockProblem::measurement(const Eigen::Vector3d& u_in) const {
  const Eigen::Vector3d u = u_in.normalized();
  // Eigenvectors of u.sigma for +1 and -1.
  Eigen::Vector2cd plus, minus;
  const double c1 = 1.0 + u.z();
  if (c1 < 1e-12) {
    plus << 0.0, 1.0;
    minus << 1.0, 0.0;
  } else {
    const double norm = std::sqrt(2.0 * c1);
    plus << c1 / norm, Complex(u.x(), u.y()) / norm;
    minus << -Complex(u.x(), -u.y()) / norm, c1 / norm;
  }
  CMatrix basis(block_.rows(), block_.rows());
  basis.col(0) = block_ * plus;
  basis.col(1) = block_ * minus;
  basis.rightCols(rest_.cols()) = rest_;
  return Measurement::from_basis(std::move(basis));
}

double DegenerateBlockProblem::distance(const Eigen::Vector3d& u) const {
  return normalized_distance(rho_, measurement(u));
}

double DegenerateBlockProblem::predicted(const Eigen::Vector3d& u) const {
  const Eigen::Vector3d v = u.normalized();
  return v.dot(q_ * v);
}

MeasureEstimate DegenerateBlockProblem::solve() const {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> eig(q_);
  const Eigen::Vector3d u = eig.eigenvectors().col(2);
  return {eig.eigenvalues()(2), EstimateKind::Exact, measurement(u)};
}

MeasureEstimate min_exact_2d_block(const DensityMatrix& rho) {
  return DegenerateBlockProblem(rho).solve();
}

std::optional<MeasureEstimate> min_exact(const DensityMatrix& rho) {
  const auto spaces = marginal_eigenspaces(rho);
  int doubles = 0;
  bool larger = false;
  for (const auto& s : spaces) {
    doubles += s.basis.cols() == 2;
    larger = larger || s.basis.cols() > 2;
  }
  if (!larger && doubles == 0) return min_exact_nondegenerate(rho);
  if (!larger && doubles == 1) return min_exact_2d_block(rho);
  return std::nullopt;
}

std::optional<ClosedForms> closed_forms(const StateSpec& spec) {
  spec.check();
  auto both = [](double gd, double min) {
    return ClosedForms{{gd, EstimateKind::Exact, std::nullopt}, {min, EstimateKind::Exact, std::nullopt}};
  };
  switch (spec.family) {
    case Family::Horodecki2x4: {
      const double a = spec.param("a");
      const double denom = (1.0 + 7.0 * a) * (1.0 + 7.0 * a);
      const double min = 12.0 * a * a / denom;
      const double gd = a <= 1.0 / 3.0 ? min : (1.0 + a * (6.0 * a - 1.0)) / denom;
      return both(gd, min);
    }
    case Family::Werner: {
      const double m = spec.param("m");
      const double v = (m * spec.param("z") - 1.0) / (m * m - 1.0);
      return both(v * v, v * v);
    }
    case Family::Isotropic: {
      const double m = spec.param("m");
      const double v = (m * m * spec.param("z") - 1.0) / (m * m - 1.0);
      return both(v * v, v * v);
    }
    case Family::Benatti:
      return both(1.0 / 9.0, 1.0 / 9.0);
    default:
      return std::nullopt;
  }
}

}  // namespace qcorr
