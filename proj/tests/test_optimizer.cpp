#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <vector>

#include "oracle.hpp"
#include "qcorr/errors.hpp"
#include "qcorr/measures.hpp"
#include "qcorr/optimizer.hpp"
#include "qcorr/states.hpp"

using namespace qcorr;

TEST_CASE("RandomStream is keyed by seed and index") {
  RandomStream a(7, 3), b(7, 3), c(7, 4), d(8, 3);
  const auto first = a.next_u64();
  CHECK(first == b.next_u64());
  CHECK(first != c.next_u64());
  CHECK(first != d.next_u64());

  RandomStream s(1, 0);
  double mean = 0, sq = 0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double u = s.uniform();
    REQUIRE(u > 0.0);
    REQUIRE(u < 1.0);
    const double g = s.normal();
    mean += g;
    sq += g * g;
  }
  CHECK(std::abs(mean / n) < 0.01);
  CHECK(std::abs(sq / n - 1.0) < 0.02);
}

TEST_CASE("haar_unitary") {
  SUBCASE("unitary for several sizes") {
    for (int d : {1, 2, 3, 4, 7}) {
      RandomStream s(11, static_cast<std::uint64_t>(d));
      const CMatrix u = haar_unitary(d, s);
      CHECK((u.adjoint() * u - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
  SUBCASE("d = 1 is a phase") {
    RandomStream s(2, 0);
    CHECK(std::abs(std::abs(haar_unitary(1, s)(0, 0)) - 1.0) < 1e-14);
  }
  SUBCASE("deterministic") {
    RandomStream s1(99, 5), s2(99, 5);
    CHECK(haar_unitary(3, s1) == haar_unitary(3, s2));
  }
  SUBCASE("first moment of |U00|^2 at d = 2") {
    double mean = 0;
    for (int k = 0; k < 10000; ++k) {
      RandomStream s(123, static_cast<std::uint64_t>(k));
      mean += std::norm(haar_unitary(2, s)(0, 0));
    }
    CHECK(std::abs(mean / 10000 - 0.5) < 0.02);
  }
  SUBCASE("phase convention leaves no bias on the diagonal") {
    Complex mean = 0;
    for (int k = 0; k < 10000; ++k) {
      RandomStream s(321, static_cast<std::uint64_t>(k));
      mean += haar_unitary(3, s)(0, 0);
    }
    CHECK(std::abs(mean / 10000.0) < 0.03);
  }
  CHECK_THROWS_AS([] { RandomStream s(0, 0); return haar_unitary(0, s); }(), DimensionError);
}

TEST_CASE("histogram") {
  const std::vector<double> same(10, 0.5);
  const auto one = histogram(same, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].lower == 0.5);
  CHECK(one[0].count == 10);

  const auto collapsed = histogram(same, 60);
  REQUIRE(collapsed.size() == 1);
  CHECK(collapsed[0].count == 10);

  const std::vector<double> two{0.0, 1.0};
  const auto h = histogram(two, 2);
  REQUIRE(h.size() == 2);
  CHECK(h[0].count == 1);
  CHECK(h[1].count == 1);
  CHECK(h[0].lower == 0.0);
  CHECK(h[1].lower == 0.5);

  std::vector<double> many;
  for (int i = 0; i < 1000; ++i) many.push_back(std::sin(i));
  std::uint64_t total = 0;
  for (const auto& b : histogram(many, 17)) total += b.count;
  CHECK(total == 1000);

  CHECK_THROWS_AS(histogram(std::vector<double>{}, 3), DomainError);
  CHECK_THROWS_AS(histogram(two, 0), DomainError);
}

TEST_CASE("reports are consistent with their witness") {
  SamplerConfig cfg;
  cfg.trials = 500;
  cfg.seed = 4;
  for (const auto& rho : {states::upb_tiles(), states::horodecki_4x4_key(), states::horodecki_3x3(3.5)}) {
    const auto gd = sample_gd(rho, cfg);
    CHECK(std::abs(normalized_distance(rho, gd.best_measurement) - gd.best_value) < 1e-12);
    CHECK(gd.samples.size() == cfg.trials);
    CHECK(projector_defects(gd.best_measurement.projectors()).worst() < 1e-10);
    const auto mn = sample_min(rho, cfg);
    CHECK(std::abs(normalized_distance(rho, mn.best_measurement) - mn.best_value) < 1e-12);
    CHECK(preserves_marginal(mn.best_measurement, marginal(rho)));
  }
}

TEST_CASE("thread count does not change the report") {
  SamplerConfig cfg;
  cfg.trials = 3000;
  cfg.seed = 77;
  cfg.refine = true;
  const auto rho = states::upb_tiles();
  cfg.threads = 1;
  const auto one = sample_gd(rho, cfg);
  for (unsigned t : {2u, 3u, 8u}) {
    cfg.threads = t;
    const auto many = sample_gd(rho, cfg);
    CHECK(many.best_value == one.best_value);
    CHECK(many.trial_index == one.trial_index);
    CHECK(many.samples == one.samples);
    CHECK(many.best_measurement.basis() == one.best_measurement.basis());
  }
  const auto pyramid = states::upb_pyramid();
  cfg.threads = 1;
  const auto min_one = sample_min(pyramid, cfg);
  cfg.threads = 5;
  CHECK(sample_min(pyramid, cfg).best_value == min_one.best_value);
}

TEST_CASE("monotone in the number of trials") {
  SamplerConfig cfg;
  cfg.seed = 2024;
  const auto rho = states::horodecki_4x4_key();
  double gd_prev = 1e9, min_prev = -1e9;
  for (std::uint64_t trials : {1, 10, 100, 1000, 5000}) {
    cfg.trials = trials;
    const double gd = sample_gd(rho, cfg).best_value;
    const double mn = sample_min(rho, cfg).best_value;
    CHECK(gd <= gd_prev);
    CHECK(mn >= min_prev);
    gd_prev = gd;
    min_prev = mn;
  }
}

TEST_CASE("bound consistency on every factory state") {
  SamplerConfig cfg;
  cfg.trials = 400;
  cfg.seed = 9;
  cfg.refine = true;
  const std::vector<DensityMatrix> rhos{
      states::horodecki_2x4(0.3),  states::horodecki_3x3(0.7), states::horodecki_3x3(2.5),
      states::horodecki_4x4_key(), states::upb_pyramid(),      states::upb_tiles(),
      states::benatti_4x4(),       states::werner(3, 0.4),     states::isotropic(3, 0.6)};
  for (const auto& rho : rhos) {
    CHECK(sample_gd(rho, cfg).best_value >= gd_lower_bound(rho).value - 1e-9);
    CHECK(sample_min(rho, cfg).best_value <= min_upper_bound(rho).value + 1e-9);
  }
}

TEST_CASE("sampler reaches known optima") {
  SamplerConfig cfg;
  cfg.trials = 10000;
  cfg.seed = 1;
  SUBCASE("2x4 family, GD") {
    const auto rho = states::horodecki_2x4(0.2);
    const double exact = gd_exact_2xn(rho).value;
    CHECK(std::abs(sample_gd(rho, cfg).best_value - exact) < 1e-4);
  }
  SUBCASE("pyramid, MIN") {
    CHECK(std::abs(sample_min(states::upb_pyramid(), cfg).best_value - 0.75 * (std::sqrt(5.0) - 2)) < 1e-4);
  }
  SUBCASE("tiles, MIN has a single admissible measurement") {
    cfg.trials = 50;
    const auto report = sample_min(states::upb_tiles(), cfg);
    CHECK(std::abs(report.best_value - 95.0 / 704) < 1e-12);
    for (double v : report.samples) CHECK(std::abs(v - 95.0 / 704) < 1e-12);
  }
  SUBCASE("tiles, GD samples never cross the bound") {
    cfg.trials = 5000;
    const auto report = sample_gd(states::upb_tiles(), cfg);
    const double bound = gd_lower_bound(states::upb_tiles()).value;
    for (const auto& b : report.histogram) CHECK(b.lower >= bound - 1e-9);
  }
}

TEST_CASE("refinement never makes things worse") {
  SamplerConfig cfg;
  cfg.trials = 200;
  cfg.seed = 5;
  const auto rho = states::horodecki_4x4_key();
  const auto raw = sample_gd(rho, cfg);
  cfg.refine = true;
  const auto refined = sample_gd(rho, cfg);
  CHECK(refined.best_value <= raw.best_value);
  CHECK(refined.samples == raw.samples);
  CHECK(std::abs(normalized_distance(rho, refined.best_measurement) - refined.best_value) < 1e-12);
}

TEST_CASE("resolve_threads") {
  CHECK(resolve_threads(3) == 3);
  CHECK(resolve_threads(0) >= 1);
}
