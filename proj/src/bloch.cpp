#include "qcorr/bloch.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "qcorr/errors.hpp"
#include "qcorr/linalg.hpp"

namespace qcorr::bloch {
namespace {

constexpr double kImagResidue = 1e-9;

GeneratorBasis build_generators(int d) {
  GeneratorBasis basis{d, {}};
  basis.matrices.reserve(static_cast<std::size_t>(d * d - 1));
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k) {
      CMatrix g = CMatrix::Zero(d, d);
      g(j, k) = g(k, j) = 1.0;
      basis.matrices.push_back(std::move(g));
    }
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k) {
      CMatrix g = CMatrix::Zero(d, d);
      g(j, k) = Complex(0.0, -1.0);
      g(k, j) = Complex(0.0, 1.0);
      basis.matrices.push_back(std::move(g));
    }
  for (int l = 1; l < d; ++l) {
    CMatrix g = CMatrix::Zero(d, d);
    const double c = std::sqrt(2.0 / (l * (l + 1.0)));
    for (int j = 0; j < l; ++j) g(j, j) = c;
    g(l, l) = -c * l;
    basis.matrices.push_back(std::move(g));
  }
  return basis;
}

// sum_{i,j} a(j, i) * block(i, j): the n x n operator with
// Tr(rho (a (x) b)) = Tr(contract_a(rho, a) b).
CMatrix contract_a(const CMatrix& rho, const CMatrix& a, int m, int n) {
  CMatrix out = CMatrix::Zero(n, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (a(j, i) != Complex(0.0, 0.0)) out += a(j, i) * rho.block(i * n, j * n, n, n);
  return out;
}

Complex trace_product(const CMatrix& c, const CMatrix& b) {
  return (c.transpose().cwiseProduct(b)).sum();
}

double real_part(Complex z, const char* what) {
  if (std::abs(z.imag()) > kImagResidue)
    throw DomainError(std::string("non-Hermitian input: imaginary residue in ") + what);
  return z.real();
}

}  // namespace

std::shared_ptr<const GeneratorBasis> generators(int d) {
  if (d < 2) throw DimensionError("generators need d >= 2");
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const GeneratorBasis>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[d];
  if (!slot) slot = std::make_shared<const GeneratorBasis>(build_generators(d));
  return slot;
}

BlochForm decompose(const DensityMatrix& rho) {
  const int m = rho.dim_a();
  const int n = rho.dim_b();
  const auto mu = generators(m);
  const auto nu = generators(n);
  const CMatrix& data = rho.data();

  BlochForm bf{m, n, RVector(m * m - 1), RVector(n * n - 1), RMatrix(m * m - 1, n * n - 1)};
  const CMatrix rho_b = linalg::partial_trace_a(data, m, n);
  for (int j = 0; j < n * n - 1; ++j)
    bf.y(j) = 0.5 * n * real_part(trace_product(rho_b, nu->matrices[j]), "y");

  for (int i = 0; i < m * m - 1; ++i) {
    const CMatrix c = contract_a(data, mu->matrices[i], m, n);
    bf.x(i) = 0.5 * m * real_part(c.trace(), "x");
    for (int j = 0; j < n * n - 1; ++j)
      bf.t(i, j) = 0.25 * m * n * real_part(trace_product(c, nu->matrices[j]), "T");
  }
  return bf;
}

DensityMatrix reconstruct(const BlochForm& bf) {
  const int m = bf.dim_a;
  const int n = bf.dim_b;
  if (bf.x.size() != m * m - 1 || bf.y.size() != n * n - 1 || bf.t.rows() != m * m - 1 ||
      bf.t.cols() != n * n - 1)
    throw DimensionError("Bloch form sizes do not match its dimensions");
  const auto mu = generators(m);
  const auto nu = generators(n);

  CMatrix local_a = CMatrix::Identity(m, m);
  for (int i = 0; i < m * m - 1; ++i) local_a += bf.x(i) * mu->matrices[i];
  CMatrix local_b = CMatrix::Zero(n, n);
  for (int j = 0; j < n * n - 1; ++j) local_b += bf.y(j) * nu->matrices[j];

  CMatrix out = linalg::kron(local_a, CMatrix::Identity(n, n)) +
                linalg::kron(CMatrix::Identity(m, m), local_b);
  for (int i = 0; i < m * m - 1; ++i) {
    CMatrix row = CMatrix::Zero(n, n);
    for (int j = 0; j < n * n - 1; ++j)
      if (bf.t(i, j) != 0.0) row += bf.t(i, j) * nu->matrices[j];
    out += linalg::kron(mu->matrices[i], row);
  }
  return DensityMatrix(out / static_cast<double>(m * n), m, n);
}

RMatrix gram(const BlochForm& bf) {
  const RMatrix g = bf.x * bf.x.transpose() + (2.0 / bf.dim_b) * bf.t * bf.t.transpose();
  return 0.5 * (g + g.transpose());
}

RVector local_vector(const CMatrix& op) {
  const auto mu = generators(static_cast<int>(op.rows()));
  RVector v(mu->matrices.size());
  for (std::size_t i = 0; i < mu->matrices.size(); ++i)
    v(static_cast<Eigen::Index>(i)) = trace_product(op, mu->matrices[i]).real();
  return v;
}

CMatrix local_operator(const RVector& v, double trace) {
  const int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(v.size()) + 1.0)));
  if (d * d - 1 != v.size()) throw DimensionError("vector length is not d^2 - 1");
  const auto mu = generators(d);
  CMatrix out = (trace / d) * CMatrix::Identity(d, d);
  for (int i = 0; i < v.size(); ++i) out += 0.5 * v(i) * mu->matrices[i];
  return out;
}

}  // namespace qcorr::bloch
