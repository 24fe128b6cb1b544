#include <doctest.h>

#include <cmath>

#include "oracle.hpp"
#include "qcorr/bloch.hpp"
#include "qcorr/entanglement.hpp"
#include "qcorr/errors.hpp"
#include "qcorr/measures.hpp"
#include "qcorr/states.hpp"

using namespace qcorr;

namespace {

std::vector<DensityMatrix> all_factory_states() {
  return {states::horodecki_2x4(0.0),  states::horodecki_2x4(0.37), states::horodecki_2x4(1.0),
          states::horodecki_3x3(0.0),  states::horodecki_3x3(2.5),  states::horodecki_3x3(5.0),
          states::horodecki_4x4_key(), states::upb_pyramid(),       states::upb_tiles(),
          states::benatti_4x4(),       states::werner(4, 0.3),      states::werner(3, -1.0),
          states::isotropic(3, 0.7),   states::isotropic(2, 1.0)};
}

}  // namespace

TEST_CASE("factory outputs satisfy the density-matrix invariants") {
  for (const auto& rho : all_factory_states()) {
    const auto r = validate(rho);
    CHECK(r.hermiticity_defect <= tol::kHermitian);
    CHECK(r.trace_defect <= tol::kTrace);
    CHECK(r.min_eigenvalue >= tol::kPsd);
    CHECK(r.ok());
  }
}

TEST_CASE("horodecki_2x4") {
  SUBCASE("a = 0 is the product |1><1| (x) |+03><+03|") {
    const auto rho = states::horodecki_2x4(0.0);
    CVector b = CVector::Zero(4);
    b(0) = b(3) = 1.0;
    CVector a = CVector::Zero(2);
    a(1) = 1.0;
    const CMatrix expected = oracle::kron(oracle::projector(a), oracle::projector(b));
    CHECK((rho.data() - expected).cwiseAbs().maxCoeff() < 1e-15);
  }
  SUBCASE("a = 1/2 has x = (0, 0, -1/9)") {
    const auto bf = bloch::decompose(states::horodecki_2x4(0.5));
    CHECK(std::abs(bf.x(0)) < 1e-14);
    CHECK(std::abs(bf.x(1)) < 1e-14);
    CHECK(std::abs(bf.x(2) + 1.0 / 9.0) < 1e-14);
  }
  SUBCASE("PPT on the whole range") {
    for (double a = 0.0; a <= 1.0; a += 0.05) CHECK(is_ppt(states::horodecki_2x4(a)));
  }
  SUBCASE("dimensions and range") {
    const auto rho = states::horodecki_2x4(0.3);
    CHECK(rho.dim_a() == 2);
    CHECK(rho.dim_b() == 4);
    CHECK_THROWS_AS(states::horodecki_2x4(1.5), DomainError);
    CHECK_THROWS_AS(states::horodecki_2x4(-0.1), DomainError);
  }
}

TEST_CASE("horodecki_3x3") {
  SUBCASE("beta <-> 5 - beta is the same spectrum") {
    for (double beta : {0.0, 0.7, 1.9, 3.3}) {
      Eigen::SelfAdjointEigenSolver<CMatrix> a(states::horodecki_3x3(beta).data());
      Eigen::SelfAdjointEigenSolver<CMatrix> b(states::horodecki_3x3(5.0 - beta).data());
      CHECK((a.eigenvalues() - b.eigenvalues()).cwiseAbs().maxCoeff() < 1e-14);
    }
  }
  SUBCASE("affine in beta") {
    for (auto [b1, b2] : {std::pair{0.0, 5.0}, std::pair{1.2, 3.9}, std::pair{0.4, 0.6}}) {
      const CMatrix mid = states::horodecki_3x3((b1 + b2) / 2).data();
      const CMatrix avg = (states::horodecki_3x3(b1).data() + states::horodecki_3x3(b2).data()) / 2.0;
      CHECK((mid - avg).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
  SUBCASE("the 2x4 family is not affine in a") {
    const CMatrix mid = states::horodecki_2x4(0.5).data();
    const CMatrix avg = (states::horodecki_2x4(0.0).data() + states::horodecki_2x4(1.0).data()) / 2.0;
    CHECK((mid - avg).cwiseAbs().maxCoeff() > 1e-3);
  }
  SUBCASE("PPT switches at beta = 1") {
    CHECK_FALSE(is_ppt(states::horodecki_3x3(0.0)));
    CHECK(is_ppt(states::horodecki_3x3(3.5)));
  }
  CHECK_THROWS_AS(states::horodecki_3x3(5.01), DomainError);
}

TEST_CASE("horodecki_4x4_key") {
  const auto rho = states::horodecki_4x4_key();
  const double s = std::sqrt(2.0) / (8 * (1 + std::sqrt(2.0)));
  const double t = 1.0 / (4 * (1 + std::sqrt(2.0)));
  // Eight diagonal entries equal s, four equal t, four vanish.
  int ns = 0, nt = 0, nz = 0;
  for (int i = 0; i < 16; ++i) {
    const double d = rho.data()(i, i).real();
    ns += std::abs(d - s) < 1e-15;
    nt += std::abs(d - t) < 1e-15;
    nz += d == 0.0;
  }
  CHECK(ns == 8);
  CHECK(nt == 4);
  CHECK(nz == 4);
  CHECK(std::abs(8 * s + 4 * t - 1.0) < 1e-15);
  CHECK(bloch::decompose(rho).x.norm() < 1e-14);
  CHECK(validate(rho).min_eigenvalue >= tol::kPsd);
  CHECK(is_ppt(rho));
}

TEST_CASE("UPB states") {
  for (const auto& [name, upb, rho] :
       {std::tuple{"pyramid", states::pyramid_upb(), states::upb_pyramid()},
        std::tuple{"tiles", states::tiles_upb(), states::upb_tiles()}}) {
    CAPTURE(name);
    CMatrix gram(5, 5);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) gram(i, j) = upb[i].dot(upb[j]);
    CHECK((gram - CMatrix::Identity(5, 5)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(std::abs(rho.data().trace() - Complex(1.0)) < 1e-14);
    for (const auto& psi : upb) CHECK((rho.data() * psi).norm() < 1e-14);
  }

  SUBCASE("pyramid marginal has the single non-degenerate eigenvector |2>") {
    const auto spaces = marginal_eigenspaces(states::upb_pyramid());
    REQUIRE(spaces.size() == 2);
    const auto& single = spaces[0].basis.cols() == 1 ? spaces[0] : spaces[1];
    CHECK(std::abs(std::abs(single.basis(2, 0)) - 1.0) < 1e-12);
  }
  SUBCASE("tiles marginal is non-degenerate with eigenvectors (-1,0,1), (1,(5+-sqrt33)/2,1)") {
    const auto spaces = marginal_eigenspaces(states::upb_tiles());
    REQUIRE(spaces.size() == 3);
    const double r = std::sqrt(33.0);
    std::vector<CVector> expected(3, CVector(3));
    expected[0] << -1.0, 0.0, 1.0;
    expected[1] << 1.0, (5.0 - r) / 2.0, 1.0;
    expected[2] << 1.0, (5.0 + r) / 2.0, 1.0;
    for (const auto& v : expected) {
      double best = 0;
      for (const auto& s : spaces) best = std::max(best, std::abs(s.basis.col(0).dot(v.normalized())));
      CHECK(best == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("benatti_4x4") {
  const auto rho = states::benatti_4x4();
  CHECK(std::abs(rho.data().trace() - Complex(1.0)) < 1e-15);
  const CMatrix quarter = CMatrix::Identity(4, 4) / 4.0;
  CHECK((oracle::partial_trace_b(rho.data(), 4, 4) - quarter).cwiseAbs().maxCoeff() < 1e-12);
  CMatrix rho_b = CMatrix::Zero(4, 4);
  for (int i = 0; i < 4; ++i) rho_b += rho.data().block(4 * i, 4 * i, 4, 4);
  CHECK((rho_b - quarter).cwiseAbs().maxCoeff() < 1e-12);
  const auto bf = bloch::decompose(rho);
  CHECK(((bf.t * bf.t.transpose()) - (4.0 / 9.0) * RMatrix::Identity(15, 15)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("werner and isotropic") {
  CHECK(std::abs(states::werner(4, 0.3).data().trace() - Complex(1.0)) < 1e-14);
  CHECK((states::werner(3, 1.0 / 3.0).data() - CMatrix::Identity(9, 9) / 9.0).cwiseAbs().maxCoeff() < 1e-15);
  CHECK(bloch::decompose(states::werner(3, 1.0 / 3.0)).t.norm() < 1e-14);

  CHECK((states::isotropic(3, 1.0 / 9.0).data() - CMatrix::Identity(9, 9) / 9.0).cwiseAbs().maxCoeff() < 1e-15);
  const CMatrix pure = states::isotropic(3, 1.0).data();
  CHECK((pure * pure - pure).cwiseAbs().maxCoeff() < 1e-14);
  CHECK(std::abs(states::isotropic(3, 0.7).data().trace() - Complex(1.0)) < 1e-14);

  SUBCASE("4x4 Werner as 2x8 has T T^t = 16 (1 - 4z)^2 I_3 / 225") {
    for (double z : {-1.0, 0.0, 0.3, 1.0}) {
      const auto bf = bloch::decompose(reinterpret(states::werner(4, z), 2, 8));
      const RMatrix expected = 16.0 * (1 - 4 * z) * (1 - 4 * z) / 225.0 * RMatrix::Identity(3, 3);
      CHECK((bf.t * bf.t.transpose() - expected).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
  CHECK_THROWS_AS(states::werner(1, 0.0), DomainError);
  CHECK_THROWS_AS(states::werner(3, 1.5), DomainError);
  CHECK_THROWS_AS(states::isotropic(3, -0.1), DomainError);
}

TEST_CASE("reinterpret") {
  const auto as28 = reinterpret(states::benatti_4x4(), 2, 8);
  CHECK(validate(as28).ok());
  const auto bf = bloch::decompose(as28);
  CHECK(bf.x.norm() < 1e-14);
  CHECK(bf.y.norm() > 1e-3);

  const auto w = states::werner(4, 0.3);
  const auto back = reinterpret(reinterpret(w, 2, 8), 4, 4);
  CHECK(back.data() == w.data());
  CHECK(back.dim_a() == 4);

  CHECK_THROWS_AS(reinterpret(states::benatti_4x4(), 3, 5), DimensionError);
}

TEST_CASE("validate reports defects without throwing") {
  CHECK(validate(states::horodecki_2x4(1.0)).min_eigenvalue >= -1e-10);
  CMatrix broken = states::upb_tiles().data();
  broken(0, 1) += Complex(1e-6, 0.0);
  const auto r = validate(DensityMatrix(broken, 3, 3));
  CHECK(r.hermiticity_defect > tol::kHermitian);
  CHECK_FALSE(r.ok());

  CMatrix negative = CMatrix::Identity(4, 4) / 4.0;
  negative(0, 0) = -0.25;
  negative(1, 1) = 0.75;
  CHECK(validate(DensityMatrix(negative, 2, 2)).min_eigenvalue < tol::kPsd);
  CHECK_THROWS_AS(DensityMatrix(CMatrix::Identity(6, 6), 2, 4), DimensionError);
}
