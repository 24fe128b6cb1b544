#include "qcorr/entanglement.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qcorr/errors.hpp"
#include "qcorr/linalg.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

CMatrix partial_transpose(const DensityMatrix& rho, Side side) {
  const int m = rho.dim_a();
  const int n = rho.dim_b();
  const CMatrix& d = rho.data();
  CMatrix out(rho.dim(), rho.dim());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (side == Side::B)
        out.block(i * n, j * n, n, n) = d.block(i * n, j * n, n, n).transpose();
      else
        out.block(i * n, j * n, n, n) = d.block(j * n, i * n, n, n);
    }
  return out;
}

bool is_ppt(const DensityMatrix& rho) {
  return linalg::min_eigenvalue(partial_transpose(rho)) >= tol::kPsd;
}

double negativity(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(partial_transpose(rho), Eigen::EigenvaluesOnly);
  double sum = 0.0;
  for (double v : solver.eigenvalues())
    if (v < 0.0) sum -= v;
  return sum;
}

std::string_view regime_name(Regime r) {
  switch (r) {
    case Regime::NptEntangled:
      return "npt-entangled";
    case Regime::PptUnknown:
      return "ppt-unknown";
    case Regime::Separable:
      return "separable";
    case Regime::BoundEntangled:
      return "bound-entangled";
    case Regime::FreeEntangled:
      return "free-entangled";
  }
  return "?";
}

bool regime_is_ppt(Regime r) {
  return r == Regime::PptUnknown || r == Regime::Separable || r == Regime::BoundEntangled;
}

Regime classify_horodecki_3x3(double beta) {
  if (!(beta >= 0.0 && beta <= 5.0))
    throw DomainError("parameter beta=" + std::to_string(beta) + " outside [0, 5]");
  Regime r;
  if (beta < 1.0)
    r = Regime::NptEntangled;
  else if (beta < 2.0)
    r = Regime::PptUnknown;
  else if (beta <= 3.0)
    r = Regime::Separable;
  else if (beta <= 4.0)
    r = Regime::BoundEntangled;
  else
    r = Regime::FreeEntangled;

  // Within 1e-8 of the PPT boundary the eigenvalue test cannot arbitrate.
  const double min_eig = linalg::min_eigenvalue(partial_transpose(states::horodecki_3x3(beta)));
  if (std::abs(min_eig) > 1e-8 && regime_is_ppt(r) != (min_eig >= tol::kPsd))
    throw std::logic_error("regime label disagrees with the PPT test at beta=" +
                           std::to_string(beta));
  return r;
}

}  // namespace qcorr
