#include <doctest.h>

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "qcorr/errors.hpp"
#include "qcorr/report.hpp"
#include "qcorr/states.hpp"

using namespace qcorr;

TEST_CASE("StateSpec parsing") {
  auto s = StateSpec::parse("werner:m=4,z=0.3");
  CHECK(s.family == Family::Werner);
  CHECK(s.param("m") == 4);
  CHECK(s.param("z") == 0.3);
  CHECK(StateSpec::parse(s.to_string()).params == s.params);
  CHECK(StateSpec::parse("tiles").family == Family::Tiles);
  CHECK(StateSpec::parse("horodecki2x4:a=0.5").param("a") == 0.5);
  CHECK(StateSpec::parse("horodecki3x3:beta=-1").param("beta") == -1);

  CHECK_THROWS_AS(StateSpec::parse("nosuchstate"), ParseError);
  CHECK_THROWS_AS(StateSpec::parse("werner:m=4,q=1"), ParseError);
  CHECK_THROWS_AS(StateSpec::parse("werner:m=4,m=5"), ParseError);
  CHECK_THROWS_AS(StateSpec::parse("werner:m=four"), ParseError);
  CHECK_THROWS_AS(StateSpec::parse("werner:m"), ParseError);
  CHECK_THROWS_AS(StateSpec::parse("tiles:a=1"), ParseError);
  CHECK_THROWS_AS(StateSpec::parse(""), ParseError);

  CHECK_THROWS_AS(StateSpec::parse("horodecki2x4:a=2").check(), DomainError);
  CHECK_THROWS_AS(StateSpec::parse("horodecki2x4").check(), DomainError);
  CHECK_THROWS_AS(StateSpec::parse("werner:m=2.5,z=0").check(), DomainError);
  CHECK_THROWS_AS(make_state(StateSpec::parse("isotropic:m=3,z=2")), DomainError);
  try {
    StateSpec::parse("horodecki2x4:a=2").check();
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find('a') != std::string::npos);
  }
  CHECK(make_state(StateSpec::parse("werner:m=3,z=0.2")).dim() == 9);
}

TEST_CASE("sweep_grid") {
  const auto g = report::sweep_grid(0.0, 5.0, 0.01);
  CHECK(g.size() == 501);
  CHECK(g.front() == 0.0);
  CHECK(g.back() == 5.0);
  CHECK(std::abs(g[250] - 2.5) < 1e-12);
  CHECK(report::sweep_grid(1.0, 1.0, 0.1).size() == 1);
  CHECK(report::sweep_grid(0.0, 1.0, 0.3).back() <= 1.0);
  CHECK_THROWS_AS(report::sweep_grid(0, 1, 0), DomainError);
  CHECK_THROWS_AS(report::sweep_grid(1, 0, 0.1), DomainError);
  CHECK_THROWS_AS(report::sweep(StateSpec::parse("horodecki2x4:a=0"), "beta", 0, 1, 0.1), DomainError);
}

TEST_CASE("3x3 family sweep") {
  const auto rows = report::sweep(StateSpec::parse("horodecki3x3:beta=0"), "beta", 0, 5, 0.01);
  REQUIRE(rows.size() == 501);
  const double lo = (5 - std::sqrt(5.0)) / 2, hi = (5 + std::sqrt(5.0)) / 2;
  for (const auto& row : rows) {
    const double b = row.param;
    const auto& e = row.eval;
    REQUIRE(e.regime);
    if (b < lo - 1e-9 || b > hi + 1e-9) {
      CHECK(std::abs(e.gd_lower.value - 4.0 / 49) < 1e-12);
      REQUIRE(e.gd_exact);
      CHECK(std::abs(e.gd_exact->value - 4.0 / 49) < 1e-12);
    }
    if (b > lo + 1e-9 && b < hi - 1e-9) {
      CHECK(std::abs(e.gd_lower.value - (9 - 5 * b + b * b) / 49) < 1e-12);
      CHECK(std::abs(e.min_upper.value - 4.0 / 49) < 1e-12);
      CHECK_FALSE(e.gd_exact);
      REQUIRE(e.gd_upper);
      CHECK(e.gd_upper->value >= e.gd_lower.value - 1e-12);
    }
  }
}

TEST_CASE("2x4 family sweep maxima") {
  const auto rows = report::sweep(StateSpec::parse("horodecki2x4:a=0"), "a", 0, 1, 0.01);
  double gd_max = 0, gd_arg = 0, min_max = 0, min_arg = 0;
  for (const auto& row : rows) {
    REQUIRE(row.eval.gd_exact);
    REQUIRE(row.eval.closed);
    CHECK(std::abs(row.eval.gd_exact->value - row.eval.closed->gd.value) < 1e-12);
    if (row.eval.gd_exact->value > gd_max) gd_max = row.eval.gd_exact->value, gd_arg = row.param;
    REQUIRE(row.eval.min_exact);
    CHECK(std::abs(row.eval.min_exact->value - row.eval.closed->min.value) < 1e-12);
    if (row.eval.min_exact->value > min_max) min_max = row.eval.min_exact->value, min_arg = row.param;
  }
  CHECK(std::abs(gd_arg - 0.33) < 1e-12);
  CHECK(gd_max < 3.0 / 25);
  CHECK(std::abs(gd_max - 3.0 / 25) < 1e-3);
  CHECK(min_arg == 1.0);
  CHECK(std::abs(min_max - 3.0 / 16) < 1e-12);
}

TEST_CASE("werner sweep: GD = MIN = closed form") {
  const auto rows = report::sweep(StateSpec::parse("werner:m=4,z=0"), "z", -1, 1, 0.05);
  for (const auto& row : rows) {
    const double expected = std::pow((4 * row.param - 1) / 15, 2);
    REQUIRE(row.eval.gd_exact);
    REQUIRE(row.eval.min_exact);
    CHECK(std::abs(row.eval.gd_exact->value - expected) < 1e-12);
    CHECK(std::abs(row.eval.min_exact->value - expected) < 1e-12);
  }
}

TEST_CASE("evaluate") {
  const auto pyr = report::evaluate(StateSpec::parse("pyramid"));
  REQUIRE(pyr.gd_exact);
  CHECK(std::abs(pyr.gd_exact->value - (19 - 7 * std::sqrt(5.0)) / 32) < 1e-10);
  REQUIRE(pyr.min_exact);
  CHECK(std::abs(pyr.min_exact->value - 0.75 * (std::sqrt(5.0) - 2)) < 1e-10);
  CHECK(pyr.ppt);

  const auto key = report::evaluate(StateSpec::parse("horodecki4x4key"));
  CHECK_FALSE(key.gd_exact);
  CHECK_FALSE(key.min_exact);
  // rho^A = I/4, so every reference measurement is admissible for both measures.
  REQUIRE(key.gd_upper);
  REQUIRE(key.min_lower);
  CHECK(key.gd_upper->value <= 0.142977);
  CHECK(std::abs(key.min_lower->value - 0.142977) < 1e-6);

  const auto ben = report::evaluate(StateSpec::parse("benatti"), reinterpret(states::benatti_4x4(), 2, 8));
  REQUIRE(ben.gd_exact);
  CHECK(std::abs(ben.gd_exact->value - 1.0 / 9) < 1e-12);
  CHECK_FALSE(ben.closed);
}

TEST_CASE("format_number") {
  CHECK(report::format_number(1.0 / 3) == "0.333333333333");
  CHECK(report::format_number(0.0) == "0");
  CHECK(report::format_number(4.0 / 49) == "0.0816326530612");
}

TEST_CASE("sweep CSV and JSON") {
  const auto base = StateSpec::parse("horodecki3x3:beta=0");
  const auto rows = report::sweep(base, "beta", 2.0, 3.0, 0.5);
  std::ostringstream csv;
  report::write_sweep_csv(csv, "beta", rows);
  std::istringstream in(csv.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "beta,gd_lower,gd_upper,gd_exact,gd_closed,min_upper,min_lower,min_exact,min_closed,negativity,ppt,regime");
  int count = 0;
  while (std::getline(in, line)) {
    ++count;
    CHECK(std::count(line.begin(), line.end(), ',') == 11);
    CHECK(line.find("separable") != std::string::npos);
  }
  CHECK(count == 3);
  CHECK(csv.str().find('\r') == std::string::npos);

  std::ostringstream js;
  report::write_sweep_json(js, base, "beta", rows);
  const auto doc = nlohmann::json::parse(js.str());
  CHECK(doc["rows"].size() == 3);

  std::ostringstream again;
  report::write_sweep_csv(again, "beta", report::sweep(base, "beta", 2.0, 3.0, 0.5));
  CHECK(again.str() == csv.str());
}

TEST_CASE("figure 2 data") {
  const auto one = report::figure2(1, 3, 60, 1);
  std::uint64_t total = 0;
  for (const auto& b : one.histogram) total += b.count;
  CHECK(total == 1);

  const auto a = report::figure2(2000, 42, 60, 1);
  const auto b = report::figure2(2000, 42, 60, 4);
  std::ostringstream sa, sb;
  report::write_figure2_csv(sa, a);
  report::write_figure2_csv(sb, b);
  CHECK(sa.str() == sb.str());
  CHECK(sa.str().rfind("# bound=0.0883227837158", 0) == 0);
  for (const auto& bin : a.histogram) CHECK(bin.lower >= a.bound - 1e-9);

  std::ostringstream js;
  report::write_figure2_json(js, a);
  const auto doc = nlohmann::json::parse(js.str());
  CHECK(doc["trials"] == 2000);
}
