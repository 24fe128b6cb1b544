#include "qcorr/states.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "qcorr/errors.hpp"

namespace qcorr::states {
namespace {

void require_range(const char* name, double v, double lo, double hi) {
  if (!(v >= lo && v <= hi))
    throw DomainError("parameter " + std::string(name) + "=" + std::to_string(v) +
                      " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

void require_local_dim(int m) {
  if (m < 2) throw DomainError("parameter m=" + std::to_string(m) + " must be >= 2");
}

CVector basis_vector(int dim, int k) {
  CVector v = CVector::Zero(dim);
  v(k) = 1.0;
  return v;
}

CVector product(const CVector& a, const CVector& b) {
  CVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

CMatrix projector(const CVector& v) { return v * v.adjoint(); }

DensityMatrix upb_complement(const std::vector<CVector>& upb) {
  CMatrix rho = CMatrix::Identity(9, 9);
  for (const auto& psi : upb) rho -= projector(psi);
  return DensityMatrix(rho / 4.0, 3, 3);
}

// 16x16 sign/weight patterns in the product basis.
constexpr std::array<std::array<int, 16>, 16> kKeyPattern{{
    // 1 -> s, -1 -> -s, 2 -> t
    {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
    {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0},
    {0, 0, 2, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 2, 1, 0, 0, 0, 0, -1, 0, 0},
    {0, 0, 1, 0, 0, 0, 0, 1, 2, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 2, 0, 0},
    {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0},
    {0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
}};

constexpr std::array<std::array<int, 16>, 16> kBenattiPattern{{
    // entries of 24 * rho
    {1, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 1},
    {0, 3, 0, 0, -1, 0, 0, 0, 0, 0, 0, -1, 0, 0, -1, 0},
    {0, 0, 1, 0, 0, 0, 0, -1, -1, 0, 0, 0, 0, 1, 0, 0},
    {0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0},
    {0, -1, 0, 0, 3, 0, 0, 0, 0, 0, 0, -1, 0, 0, -1, 0},
    {-1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1},
    {0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0},
    {0, 0, -1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, -1, 0, 0},
    {0, 0, -1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, -1, 0, 0},
    {0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0},
    {-1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1},
    {0, -1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 3, 0, 0, -1, 0},
    {0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0},
    {0, 0, 1, 0, 0, 0, 0, -1, -1, 0, 0, 0, 0, 1, 0, 0},
    {0, -1, 0, 0, -1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 3, 0},
    {1, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 1},
}};

}  // namespace

DensityMatrix horodecki_2x4(double a) {
  require_range("a", a, 0.0, 1.0);
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;

  CMatrix ent = CMatrix::Zero(8, 8);
  for (int i = 1; i <= 3; ++i) {
    CVector psi = CVector::Zero(8);
    psi(i - 1) = inv_sqrt2;  // |0, i-1>
    psi(4 + i) = inv_sqrt2;  // |1, i>
    ent += (2.0 / 7.0) * projector(psi);
  }
  ent(3, 3) += 1.0 / 7.0;  // |03><03|

  CVector phi = CVector::Zero(8);
  phi(4) = std::sqrt((1.0 + a) / 2.0);  // |1,0>
  phi(7) = std::sqrt((1.0 - a) / 2.0);  // |1,3>; with |1,2> the state is not PPT

  const double norm = 7.0 * a + 1.0;
  return DensityMatrix((7.0 * a / norm) * ent + (1.0 / norm) * projector(phi), 2, 4);
}

DensityMatrix horodecki_3x3(double beta) {
  require_range("beta", beta, 0.0, 5.0);
  CVector phi = CVector::Zero(9);
  for (int k = 0; k < 3; ++k) phi(4 * k) = 1.0 / std::sqrt(3.0);

  CMatrix rho = (2.0 / 7.0) * projector(phi);
  for (int k = 0; k < 3; ++k) {
    const int next = (k + 1) % 3;
    rho(3 * k + next, 3 * k + next) += beta / 21.0;          // sigma_+ : |k, k+1>
    rho(3 * next + k, 3 * next + k) += (5.0 - beta) / 21.0;  // sigma_- : |k+1, k>
  }
  return DensityMatrix(rho, 3, 3);
}

DensityMatrix horodecki_4x4_key() {
  const double s = std::numbers::sqrt2 / (8.0 * (1.0 + std::numbers::sqrt2));
  const double t = 1.0 / (4.0 * (1.0 + std::numbers::sqrt2));
  CMatrix rho = CMatrix::Zero(16, 16);
  for (int i = 0; i < 16; ++i)
    for (int j = 0; j < 16; ++j) {
      const int code = kKeyPattern[i][j];
      rho(i, j) = code == 2 ? t : code * s;
    }
  return DensityMatrix(rho, 4, 4);
}

std::vector<CVector> pyramid_upb() {
  const double sqrt5 = std::sqrt(5.0);
  const double norm = 2.0 / std::sqrt(5.0 + sqrt5);
  const double h = std::sqrt(1.0 + sqrt5) / 2.0;
  std::array<CVector, 5> v;
  for (int i = 0; i < 5; ++i) {
    const double angle = 2.0 * std::numbers::pi * i / 5.0;
    v[i] = CVector(3);
    v[i] << norm * std::cos(angle), norm * std::sin(angle), norm * h;
  }
  std::vector<CVector> upb;
  for (int i = 0; i < 5; ++i) upb.push_back(product(v[i], v[(2 * i) % 5]));
  return upb;
}

std::vector<CVector> tiles_upb() {
  const CVector e0 = basis_vector(3, 0), e1 = basis_vector(3, 1), e2 = basis_vector(3, 2);
  const double r = 1.0 / std::numbers::sqrt2;
  const CVector all = e0 + e1 + e2;
  return {
      product(e0, r * (e0 - e1)),
      product(r * (e0 - e1), e2),
      product(e2, r * (e1 - e2)),
      product(r * (e1 - e2), e0),
      product(all, all) / 3.0,
  };
}

DensityMatrix upb_pyramid() { return upb_complement(pyramid_upb()); }

DensityMatrix upb_tiles() { return upb_complement(tiles_upb()); }

DensityMatrix benatti_4x4() {
  CMatrix rho(16, 16);
  for (int i = 0; i < 16; ++i)
    for (int j = 0; j < 16; ++j) rho(i, j) = kBenattiPattern[i][j] / 24.0;
  return DensityMatrix(rho, 4, 4);
}

DensityMatrix werner(int m, double z) {
  require_local_dim(m);
  require_range("z", z, -1.0, 1.0);
  const int d = m * m;
  CMatrix swap = CMatrix::Zero(d, d);
  for (int k = 0; k < m; ++k)
    for (int l = 0; l < m; ++l) swap(k * m + l, l * m + k) = 1.0;
  const double denom = static_cast<double>(m) * m * m - m;
  return DensityMatrix(((m - z) / denom) * CMatrix::Identity(d, d) + ((m * z - 1.0) / denom) * swap,
                       m, m);
}

DensityMatrix isotropic(int m, double z) {
  require_local_dim(m);
  require_range("z", z, 0.0, 1.0);
  const int d = m * m;
  CVector psi = CVector::Zero(d);
  for (int k = 0; k < m; ++k) psi(k * m + k) = 1.0 / std::sqrt(static_cast<double>(m));
  const double denom = static_cast<double>(d) - 1.0;
  return DensityMatrix(((1.0 - z) / denom) * CMatrix::Identity(d, d) +
                           ((d * z - 1.0) / denom) * projector(psi),
                       m, m);
}

}  // namespace qcorr::states
