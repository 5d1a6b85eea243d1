#include "progcost/verification.hpp"

#include "progcost/bounds.hpp"
#include "progcost/oracle.hpp"
#include "progcost/phase.hpp"
#include "progcost/reporting.hpp"
#include "progcost/scoring.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

namespace progcost {

namespace {

std::string g12(double value) {
  std::ostringstream os;
  os.precision(12);
  os << value;
  return os.str();
}

CheckResult guarded(const std::string& name, const std::function<std::pair<bool, std::string>()>& body) {
  try {
    auto [ok, detail] = body();
    return {name, ok, detail};
  } catch (const std::exception& e) {
    return {name, false, std::string("exception: ") + e.what()};
  }
}

std::vector<long long> d2_sweep_points() {
  std::vector<long long> ns;
  for (long long n = 32; n <= 512; n += 32) ns.push_back(n);
  return ns;
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  std::vector<CheckResult> out;

  out.push_back(guarded("schur-weyl dimension identity", [] {
    for (int d : {2, 3}) {
      for (int m = 0; m <= 8; ++m)
        if (sum_squared_dimensions(m, d) != binomial(m + d * d - 1, d * d - 1))
          return std::pair{false, "mismatch at d=" + std::to_string(d) + ", m=" + std::to_string(m)};
      for (int m = 1; m <= 12; ++m)
        if (dm_lower_bound(m, d) > sum_squared_dimensions(m, d).convert_to<double>())
          return std::pair{false, "polynomial bound fails at m=" + std::to_string(m)};
    }
    return std::pair{true, std::string("d in {2,3}, m <= 8 exact; bound for m <= 12")};
  }));

  out.push_back(guarded("haar quadrature equals score-matrix fidelity", [] {
    double worst = 0.0;
    for (long long n : {4, 8, 16, 32, 64}) {
      const auto set = viable_set(n, 2);
      const auto score = score_matrix(set);
      const auto grid = torus_grid(2, static_cast<int>(n) + 1);
      for (const auto& q : {sine_weights(set), optimal_fidelity(score).weights_used})
        worst = std::max(worst, std::abs(haar_fidelity(q, grid) - entanglement_fidelity(q, score).fidelity));
    }
    const auto grid = torus_grid(2, 8);
    std::vector<YoungDiagram> diagrams;
    for (int m = 0; m <= 8; ++m)
      for (auto& diagram : enumerate_diagrams(m, 2)) diagrams.push_back(diagram);
    const double ortho = character_orthonormality_check(grid, diagrams);
    return std::pair{worst <= 1e-10 && ortho <= 1e-10,
                     "max fidelity deviation " + g12(worst) + ", orthonormality " + g12(ortho)};
  }));

  out.push_back(guarded("closed-form score of the sine weights", [] {
    double worst = 0.0;
    auto check = [&](int d, long long n) {
      const auto set = viable_set(n, d);
      const double matrix = entanglement_fidelity(sine_weights(set), score_matrix(set)).fidelity * d * d;
      worst = std::max(worst, std::abs(matrix - qstar_score_closed_form<double>(d, epsilon_g<double>(set->N()))));
    };
    for (long long n = 4; n <= 512; ++n) check(2, n);
    for (long long n = 26; n <= 60; ++n) check(3, n);
    return std::pair{worst <= 1e-12, "max deviation " + g12(worst)};
  }));

  out.push_back(guarded("error and dimension bounds for the sine protocol", [] {
    int cases = 0;
    for (int d : {2, 3})
      for (long long n = 2LL * d * (d - 1); n <= (d == 2 ? 256 : 60); ++n) {
        try {
          capacity_parameter(n, d);
        } catch (const PreconditionError&) {
          continue;
        }
        const ProtocolReport r = protocol_report(n, d);
        ++cases;
        if (!r.pass_flags.all())
          return std::pair{false, "flag failure at d=" + std::to_string(d) + ", n=" + std::to_string(n)};
      }
    return std::pair{true, std::to_string(cases) + " (d, n) points, all flags true"};
  }));

  const SweepResult swept = sweep(2, d2_sweep_points());
  out.push_back(guarded("heisenberg scaling", [&] {
    return std::pair{std::abs(swept.slope + 2.0) <= 0.05, "slope " + g12(swept.slope)};
  }));

  out.push_back(guarded("cost scaling", [&] {
    bool ok = std::abs(swept.cost_slope - 1.5) <= 0.08;
    std::vector<double> x, y;
    for (double eps : {1e-12, 1e-13, 1e-14}) {
      x.push_back(std::log2(1.0 / eps));
      y.push_back(optimize_delta(2, eps).bits);
    }
    const double lower_slope = fit_line(x, y).slope;
    ok = ok && lower_slope >= 1.35;
    for (int e = 3; e <= 16; ++e) {
      const double eps = std::pow(10.0, -e);
      if (eps >= 1.0 / (32.0 * 16.0)) continue;
      ok = ok && optimize_delta(2, eps).bits <= upper_bound_cost(2, eps);
    }
    return std::pair{ok, "achieved cost slope " + g12(swept.cost_slope) + ", lower-bound slope " + g12(lower_slope)};
  }));

  out.push_back(guarded("d=2 principal eigenvalue", [] {
    double worst = 0.0;
    for (int N = 2; N <= 64; ++N) {
      const auto score = score_matrix(lattice_set(2LL * N, 2, N));
      const double power = principal_eigenpair<double>(score).value;
      const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> dense(score.to_dense<double>());
      const double closed = 2.0 + 2.0 * std::cos(std::numbers::pi / (N + 1));
      worst = std::max({worst, std::abs(power - closed), std::abs(dense.eigenvalues().maxCoeff() - closed)});
    }
    return std::pair{worst <= 1e-10, "max deviation " + g12(worst)};
  }));

  out.push_back(guarded("phase gate", [&] {
    bool ok = true;
    for (int dP = 1; dP <= 1024; ++dP)
      ok = ok && std::abs(classical_phase_error<double>(dP) - std::sin(std::numbers::pi / (2.0 * dP))) <= 1e-15;
    std::vector<double> x, y;
    for (int dP : {16, 32, 64, 128}) {
      const double eps = quantum_phase_search(sine_state(dP), 32, options.seed).value;
      x.push_back(std::log(dP));
      y.push_back(std::log(eps));
      ok = ok && eps < classical_phase_error<double>(dP);
    }
    for (int dP = 4; dP <= 256; ++dP)
      ok = ok && quantum_phase_search(sine_state(dP), 0).value < classical_phase_error<double>(dP);
    const double slope = fit_line(x, y).slope;
    ok = ok && std::abs(slope + 2.0) <= 0.1;
    std::string ratios;
    for (int dP : {32, 64}) {
      const double ratio = phase_report(dP, options.seed).asymptote_ratio;
      ratios += " " + g12(ratio);
      ok = ok && ratio >= 0.5 && ratio <= 2.0;
    }
    return std::pair{ok, "slope " + g12(slope) + ", ratios at dP=32,64:" + ratios};
  }));

  out.push_back(guarded("covariant choi decomposition", [&] {
    std::string detail;
    for (long long n : {4, 8}) {
      const ChoiFit fit = choi_monte_carlo_su2(sine_weights(viable_set(n, 2)), options.samples, options.seed);
      detail += "n=" + std::to_string(n) + " residual " + g12(fit.residual) + "; ";
    }
    return std::pair{true, detail};
  }));

  return out;
}

}  // namespace progcost
