#include "oracles.hpp"
#include "progcost/oracle.hpp"
#include "progcost/scoring.hpp"

#include <doctest.h>

#include <random>

using namespace progcost;

namespace {

// SU(2) Haar integral of a class function by a fine rectangle rule on the
// half-angle, with density sin^2(theta/2)/pi on [0, 2pi).
double su2_fidelity_by_weight_sums(const WeightVector& q) {
  const auto& members = q.set->members();
  return oracle::periodic_integral(
             [&](double t) {
               double s = 0.0;
               for (std::size_t k = 0; k < members.size(); ++k)
                 s += std::sqrt(q.probabilities(k)) * oracle::su2_weight_sum(members[k][0], members[k][1], t);
               const double chi = oracle::su2_weight_sum(1, 0, t) * s;
               return chi * chi * std::pow(std::sin(t / 2), 2) / std::numbers::pi;
             },
             4 * static_cast<int>(q.set->n()) + 16) /
         4.0;
}

std::vector<std::complex<double>> random_phases(std::mt19937_64& rng, int d) {
  std::uniform_real_distribution<double> u(0.0, 2 * std::numbers::pi);
  std::vector<std::complex<double>> x(d);
  for (auto& v : x) v = std::polar(1.0, u(rng));
  return x;
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("torus grid normalisation") {
  for (int d : {2, 3}) {
    const auto grid = torus_grid(d, 10);
    CHECK(grid.weights.sum() == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(grid.raw_weight_mean == doctest::Approx(d == 2 ? 2.0 : 6.0).epsilon(1e-12));
    CHECK(grid.points_per_direction >= 4 * (10 + 2));
  }
}

TEST_CASE("character examples") {
  const std::vector<std::complex<double>> x{std::polar(1.0, 0.4), std::polar(1.0, -1.1)};
  CHECK(std::abs(schur_character({1, 0}, x) - (x[0] + x[1])) <= 1e-12);
  CHECK(std::abs(schur_character({1, 1}, x) - x[0] * x[1]) <= 1e-12);
  for (const YoungDiagram& l : {YoungDiagram{3, 1, 0}, YoungDiagram{2, 1, 0}, YoungDiagram{4, 2, 1}}) {
    const std::vector<std::complex<double>> ones(3, 1.0);
    CHECK(std::abs(schur_character(l, ones) - irrep_dimension(l).convert_to<double>()) <= 1e-9);
  }
  CHECK(su2_character({1, 0}, 0.8) == doctest::Approx(2 * std::cos(0.4)));
  CHECK(su2_character({5, 2}, 0.0) == doctest::Approx(4.0));
  CHECK(su2_character({5, 2}, 1e-12) == doctest::Approx(4.0));
  CHECK(su2_character({2, 0}, std::numbers::pi) == doctest::Approx(-1.0));
}

TEST_CASE("characters match independent constructions") {
  std::mt19937_64 rng(3);
  for (int d = 2; d <= 4; ++d)
    for (int m = 0; m <= 6; ++m)
      for (const auto& p : oracle::brute_partitions(m, d)) {
        const auto x = random_phases(rng, d);
        CHECK(std::abs(schur_character(YoungDiagram(p, d), x) - oracle::jacobi_trudi(p, x)) <= 1e-9);
      }
  for (int m = 0; m <= 10; ++m)
    for (const auto& p : oracle::brute_partitions(m, 2))
      for (double t : {0.3, 1.9, 3.0, 5.5}) {
        const YoungDiagram l(p, 2);
        const std::vector<std::complex<double>> x{std::polar(1.0, t / 2), std::polar(1.0, -t / 2)};
        CHECK(std::abs(schur_character(l, x).real() - su2_character(l, t)) <= 1e-12);
        CHECK(su2_character(l, t) == doctest::Approx(oracle::su2_weight_sum(p[0], p[1], t)).epsilon(1e-12));
      }
}

TEST_CASE("weyl numerator at the identity vanishes") {
  CHECK(std::abs(weyl_numerator({2, 1, 0}, Eigen::Vector3d::Zero())) <= 1e-12);
}

TEST_CASE("character orthonormality") {
  std::vector<YoungDiagram> two;
  for (int m = 0; m <= 6; ++m)
    for (const auto& l : enumerate_diagrams(m, 2)) two.push_back(l);
  CHECK(character_orthonormality_check(torus_grid(2, 6), two) <= 1e-10);
  CHECK(character_orthonormality_check(torus_grid(2, 0), {YoungDiagram{0, 0}}) <= 1e-12);
  CHECK(character_orthonormality_check(torus_grid(2, 1), {YoungDiagram{1, 0}}) <= 1e-12);
  std::vector<YoungDiagram> three;
  for (int m = 0; m <= 5; ++m)
    for (const auto& l : enumerate_diagrams(m, 3)) three.push_back(l);
  CHECK(character_orthonormality_check(torus_grid(3, 5), three) <= 1e-10);
}

TEST_CASE("haar fidelity examples") {
  const auto s4 = viable_set(4, 2);
  CHECK(haar_fidelity(sine_weights(s4), torus_grid(2, 5)) == doctest::Approx(0.75).epsilon(1e-12));
  const auto s8 = viable_set(8, 2);
  CHECK(haar_fidelity(sine_weights(s8), torus_grid(2, 9)) == doctest::Approx(0.8901650429).epsilon(1e-9));
  const auto single2 = lattice_set(2, 2, 1);
  CHECK(haar_fidelity(WeightVector(single2, Eigen::VectorXd::Ones(1)), torus_grid(2, 3)) ==
        doctest::Approx(0.5).epsilon(1e-12));
  const auto single3 = lattice_set(12, 3, 1);
  CHECK(haar_fidelity(WeightVector(single3, Eigen::VectorXd::Ones(1)), torus_grid(3, 13)) ==
        doctest::Approx(1.0 / 3).epsilon(1e-10));
  CHECK_THROWS_AS(haar_fidelity(sine_weights(s8), torus_grid(2, 8)), PreconditionError);
}

TEST_CASE("haar fidelity equals score-matrix fidelity for d = 2") {
  for (long long n : {4LL, 8LL, 16LL, 32LL, 64LL}) {
    const auto set = viable_set(n, 2);
    const auto score = score_matrix(set);
    const auto grid = torus_grid(2, static_cast<int>(n) + 1);
    for (const auto& q : {sine_weights(set), optimal_fidelity(score).weights_used}) {
      const double matrix = entanglement_fidelity(q, score).fidelity;
      CHECK(std::abs(haar_fidelity(q, grid) - matrix) <= 1e-10);
      CHECK(std::abs(su2_fidelity_by_weight_sums(q) - matrix) <= 1e-10);
    }
  }
}

TEST_CASE("haar fidelity equals score-matrix fidelity for d = 3") {
  for (long long n : {26LL, 33LL}) {
    const auto set = viable_set(n, 3);
    const auto q = sine_weights(set);
    const double matrix = entanglement_fidelity(q, score_matrix(set)).fidelity;
    CHECK(std::abs(haar_fidelity(q, torus_grid(3, static_cast<int>(n) + 1)) - matrix) <= 1e-8);
  }
}

TEST_CASE("monte-carlo choi decomposition") {
  const auto q4 = sine_weights(viable_set(4, 2));
  const auto fit = choi_monte_carlo_su2(q4, 1'000'000, 0);
  CHECK(fit.a == doctest::Approx(0.25).epsilon(0.02));
  CHECK(fit.residual <= 5e-3);
  CHECK(std::abs(fit.choi.trace() - 1.0) <= 1e-12);
  CHECK((fit.choi - fit.choi.adjoint()).norm() <= 1e-12);

  const auto single = WeightVector(lattice_set(2, 2, 1), Eigen::VectorXd::Ones(1));
  const auto one = choi_monte_carlo_su2(single, 1'000'000, 1);
  CHECK(std::abs(one.fidelity - 0.5) <= 5e-3);
  CHECK(one.reference_fidelity == doctest::Approx(0.5));
}

TEST_CASE("monte-carlo choi is deterministic per seed and converges") {
  const auto q = sine_weights(viable_set(8, 2));
  const auto a = choi_monte_carlo_su2(q, 100'000, 42, false);
  const auto b = choi_monte_carlo_su2(q, 100'000, 42, false);
  CHECK(a.choi == b.choi);
  double coarse = 0.0, fine = 0.0;
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    coarse += choi_monte_carlo_su2(q, 100'000, seed, false).residual;
    fine += choi_monte_carlo_su2(q, 400'000, seed, false).residual;
  }
  CHECK(fine / coarse == doctest::Approx(0.5).epsilon(0.35));
  CHECK_THROWS_AS(choi_monte_carlo_su2(q, 10, 0), PreconditionError);
}

}
