#include "oracles.hpp"
#include "progcost/bounds.hpp"

#include <doctest.h>

using namespace progcost;

namespace {

// Direct evaluation of the lower-bound formula, independent of the library.
double lower_formula(int d, double eps, double delta) {
  const double nu = d * d - 1.0;
  const double x = 4.0 * std::sqrt(2.0 * eps);
  return (1.0 - delta - x) * nu * std::log2(delta / (x * nu)) - 1.0;
}

double grid_maximum(int d, double eps) {
  const double nu = d * d - 1.0;
  const double x = 4.0 * std::sqrt(2.0 * eps);
  double best = -1e300;
  const int steps = 200000;
  for (int k = 1; k < steps; ++k) {
    const double delta = x * nu + (1.0 - x - x * nu) * k / steps;
    best = std::max(best, lower_formula(d, eps, delta));
  }
  return best;
}

}  // namespace

TEST_SUITE("bounds") {

TEST_CASE("lower bound examples") {
  CHECK(lower_bound_cost(2, 1e-6, 0.1).value == doctest::Approx(5.8655).epsilon(1e-4));
  CHECK(lower_bound_cost(2, 1e-6, 0.1).value == doctest::Approx(lower_formula(2, 1e-6, 0.1)).epsilon(1e-14));
  CHECK(lower_bound_cost(2, 1e-8, 0.05).value == doctest::Approx(lower_formula(2, 1e-8, 0.05)).epsilon(1e-14));
  const double eps = 1e-8;
  const double delta = 4.0 * std::sqrt(2.0 * eps) * 3.0;
  const auto edge = lower_bound_cost(2, eps, delta);
  CHECK(edge.value == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(edge.vacuous);
  const auto bad = lower_bound_cost(2, 1e-2, 0.5);
  CHECK(bad.value < 0.0);
  CHECK(bad.vacuous);
  CHECK_THROWS_AS(lower_bound_cost(2, 1e-6, 1.5), PreconditionError);
  CHECK_THROWS_AS(lower_bound_cost(1, 1e-6, 0.1), PreconditionError);
}

TEST_CASE("lower bound leading asymptotics in epsilon") {
  const double delta = 0.2;
  const double a = lower_bound_cost(3, 1e-20, delta).value;
  const double b = lower_bound_cost(3, 1e-24, delta).value;
  // Each decade of eps adds (1-delta-x) nu/2 log2(10) bits; x is negligible here.
  CHECK((b - a) / (4.0 * std::log2(10.0)) == doctest::Approx((1.0 - delta) * 8.0 / 2.0).epsilon(1e-6));
}

TEST_CASE("dimension and cost forms agree") {
  for (int d : {2, 3, 5})
    for (double eps : {1e-4, 1e-6, 1e-9, 1e-14})
      for (double delta : {0.01, 0.1, 0.3, 0.7}) {
        const auto a = lower_bound_cost(d, eps, delta);
        const auto b = lower_bound_dimension(d, eps, delta);
        CHECK(std::abs(a.value - b.value) <= 1e-12 * std::max(1.0, std::abs(a.value)));
        CHECK(a.vacuous == b.vacuous);
      }
}

TEST_CASE("optimised delta matches a dense grid search") {
  for (int d : {2, 3})
    for (double eps : {1e-6, 1e-10, 1e-12, 1e-14}) {
      const auto opt = optimize_delta(d, eps);
      CHECK(opt.bits == doctest::Approx(grid_maximum(d, eps)).epsilon(1e-7));
      CHECK(opt.bits == doctest::Approx(lower_bound_cost(d, eps, opt.delta).value).epsilon(1e-12));
    }
  const auto at12 = optimize_delta(2, 1e-12);
  CHECK(at12.delta == doctest::Approx(0.1030).epsilon(1e-3));
  CHECK(at12.bits == doctest::Approx(32.8185).epsilon(1e-5));
}

TEST_CASE("optimised delta: empty feasible interval") {
  CHECK_THROWS_WITH_AS(optimize_delta(2, 1.0 / 512.0), doctest::Contains("bound vacuous for all delta"),
                       PreconditionError);
  CHECK_THROWS_AS(optimize_delta(2, 0.1), PreconditionError);
  CHECK_NOTHROW(optimize_delta(2, 1.0 / 520.0));
}

TEST_CASE("optimised bound grows as epsilon shrinks") {
  double previous = -1e300;
  for (double e = -3.0; e >= -16.0; e -= 0.25) {
    const double bits = optimize_delta(2, std::pow(10.0, e)).bits;
    CHECK(bits >= previous);
    previous = bits;
  }
}

TEST_CASE("optimised bound slope at small epsilon") {
  std::vector<double> x, y;
  for (double eps : {1e-12, 1e-13, 1e-14}) {
    x.push_back(std::log2(1.0 / eps));
    y.push_back(optimize_delta(2, eps).bits);
  }
  CHECK(oracle::slope(x, y) >= 0.9 * 1.5);
}

TEST_CASE("optimised lower bound never exceeds the upper bound") {
  for (int d : {2, 3, 4})
    for (double e = -4.0; e >= -16.0; e -= 0.5) {
      const double eps = std::pow(10.0, e);
      if (eps >= 1.0 / (32.0 * std::pow(d, 4))) continue;
      CHECK(optimize_delta(d, eps).bits <= upper_bound_cost(d, eps));
    }
}

TEST_CASE("upper bound") {
  const double pi2 = std::numbers::pi * std::numbers::pi;
  CHECK(upper_bound_cost(2, 0.01) == doctest::Approx(1.5 * std::log2(162.0 * pi2 / 0.04)).epsilon(1e-14));
  CHECK(upper_bound_cost(2, 0.01) == doctest::Approx(22.93).epsilon(1e-3));
  CHECK(upper_bound_cost_simplified(2, 0.01) - upper_bound_cost(2, 0.01) == doctest::Approx(6.0).epsilon(1e-12));
  for (int d : {2, 3, 4}) {
    const double slope = (upper_bound_cost(d, 1e-9) - upper_bound_cost(d, 1e-5)) / std::log2(1e4);
    CHECK(slope == doctest::Approx((d * d - 1) / 2.0).epsilon(1e-12));
    CHECK(upper_bound_cost(d, 1e-3) >= 0.0);
  }
}

TEST_CASE("prior-work table rows") {
  const auto rows = table1_rows(2, 0.01, 1.0);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0].bits == doctest::Approx(4.0 * std::log2(100.0)));
  CHECK(rows[0].bits == doctest::Approx(26.58).epsilon(1e-3));
  CHECK(rows[0].label.find("caller-supplied") != std::string::npos);
  CHECK(rows[3].bits == doctest::Approx(std::log2(400.0)));
  CHECK(rows[3].bits == doctest::Approx(8.64).epsilon(1e-3));
  CHECK(rows[5].label.rfind("this work", 0) == 0);
  for (double e = -6.0; e >= -16.0; e -= 1.0) {
    const auto r = table1_rows(2, std::pow(10.0, e), 1.0);
    CHECK(r[5].bits < r[0].bits);
  }
  CHECK_THROWS_AS(table1_rows(2, 0.01, 0.0), PreconditionError);
}

TEST_CASE("conjectured cost") {
  const double pi2 = std::numbers::pi * std::numbers::pi;
  CHECK(conjecture_cost(3, 0.01, 162.0 * pi2 * 4.0) == doctest::Approx(upper_bound_cost_simplified(2, 0.01)));
  CHECK(conjecture_cost(1, 0.25, 1.0) == doctest::Approx(1.0));
  CHECK(conjecture_cost(6, 1e-5, 7.0) == doctest::Approx(2.0 * conjecture_cost(3, 1e-5, 7.0)));
}

TEST_CASE("bound report") {
  const auto r = bound_report(2, 1e-6, 0.1, 1.0);
  CHECK(r.lower_bits == doctest::Approx(5.8655).epsilon(1e-4));
  CHECK(r.upper_bits == doctest::Approx(upper_bound_cost(2, 1e-6)));
  CHECK_FALSE(r.lower_vacuous);
  const auto opt = bound_report(2, 1e-12, std::nullopt, 1.0);
  REQUIRE(opt.delta.has_value());
  CHECK(*opt.delta == doctest::Approx(optimize_delta(2, 1e-12).delta));
}

}
