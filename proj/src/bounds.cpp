#include "progcost/bounds.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace progcost {

namespace {

void check_domain(int d, double epsilon) {
  if (d < 2) throw PreconditionError("d must be >= 2");
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw PreconditionError("eps must lie in (0, 1)");
}

double recycling_error(double epsilon) { return 4.0 * std::sqrt(2.0 * epsilon); }

std::string format_k(double K) {
  std::ostringstream os;
  os.precision(12);
  os << K;
  return os.str();
}

}  // namespace

BoundValue lower_bound_cost(int d, double epsilon, double delta) {
  check_domain(d, epsilon);
  if (!(delta > 0.0 && delta < 1.0)) throw PreconditionError("delta must lie in (0, 1)");
  const double nu = static_cast<double>(d) * d - 1.0;
  const double x = recycling_error(epsilon);
  const double argument = delta / (x * nu);
  const double value = (1.0 - delta - x) * nu * std::log2(argument) - 1.0;
  return {value, argument <= 1.0 || value < 0.0};
}

BoundValue lower_bound_dimension(int d, double epsilon, double delta) {
  check_domain(d, epsilon);
  if (!(delta > 0.0 && delta < 1.0)) throw PreconditionError("delta must lie in (0, 1)");
  const double nu = static_cast<double>(d) * d - 1.0;
  const double x = recycling_error(epsilon);
  const double exponent = (1.0 - delta - x) * nu;
  // log2[(1/2) b^e] evaluated through natural logs.
  const double log_base = std::log(delta) - std::log(x) - std::log(nu);
  const double value = (exponent * log_base - std::numbers::ln2) / std::numbers::ln2;
  return {value, log_base <= 0.0 || value < 0.0};
}

DeltaOptimum optimize_delta(int d, double epsilon) {
  check_domain(d, epsilon);
  const double nu = static_cast<double>(d) * d - 1.0;
  const double x = recycling_error(epsilon);
  double lo = x * nu * (1.0 + 1e-9);
  double hi = 1.0 - x;
  if (!(lo < hi)) throw PreconditionError("bound vacuous for all delta");
  auto f = [&](double delta) {
    return (1.0 - delta - x) * nu * std::log2(delta / (x * nu)) - 1.0;
  };
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = hi - inv_phi * (hi - lo);
  double b = lo + inv_phi * (hi - lo);
  double fa = f(a);
  double fb = f(b);
  while (hi - lo > 1e-9) {
    if (fa < fb) {
      lo = a;
      a = b;
      fa = fb;
      b = lo + inv_phi * (hi - lo);
      fb = f(b);
    } else {
      hi = b;
      b = a;
      fb = fa;
      a = hi - inv_phi * (hi - lo);
      fa = f(a);
    }
  }
  const double delta = 0.5 * (lo + hi);
  return {delta, f(delta)};
}

double upper_bound_cost(int d, double epsilon) {
  check_domain(d, epsilon);
  const double nu = static_cast<double>(d) * d - 1.0;
  const double dm1 = d - 1.0;
  const double pi2 = std::numbers::pi * std::numbers::pi;
  return nu / 2.0 * std::log2(162.0 * pi2 * std::pow(dm1, 4) / (static_cast<double>(d) * d * epsilon));
}

double upper_bound_cost_simplified(int d, double epsilon) {
  check_domain(d, epsilon);
  const double nu = static_cast<double>(d) * d - 1.0;
  const double pi2 = std::numbers::pi * std::numbers::pi;
  return nu / 2.0 * std::log2(162.0 * pi2 * d * d / epsilon);
}

std::vector<TableRow> table1_rows(int d, double epsilon, double K) {
  check_domain(d, epsilon);
  if (!(K > 0.0)) throw PreconditionError("K must be positive");
  const double dd = d;
  const std::string k_note = " [K=" + format_k(K) + ", caller-supplied]";
  std::vector<TableRow> rows;
  rows.push_back({"d^2 log(K/eps)" + k_note, "upper", dd * dd * std::log2(K / epsilon)});
  rows.push_back({"4 d^2 log d / eps^2", "upper", 4.0 * dd * dd * std::log2(dd) / (epsilon * epsilon)});
  rows.push_back({"(1-eps) K d - (2/3) log d" + k_note, "lower",
                  (1.0 - epsilon) * K * dd - 2.0 / 3.0 * std::log2(dd)});
  rows.push_back({"log(d^2/eps)", "lower", std::log2(dd * dd / epsilon)});
  rows.push_back({"((d+1)/2) log(1/d) + ((d-1)/2) log(1/eps)", "lower",
                  (dd + 1.0) / 2.0 * std::log2(1.0 / dd) + (dd - 1.0) / 2.0 * std::log2(1.0 / epsilon)});
  rows.push_back({"this work: ((d^2-1)/2) log(162 pi^2 d^2/eps)", "upper",
                  upper_bound_cost_simplified(d, epsilon)});
  return rows;
}

double conjecture_cost(int nu, double epsilon, double C) {
  if (nu < 1) throw PreconditionError("nu must be >= 1");
  if (!(epsilon > 0.0)) throw PreconditionError("eps must be positive");
  if (!(C > 0.0)) throw PreconditionError("C must be positive");
  return nu / 2.0 * std::log2(C / epsilon);
}

BoundReport bound_report(int d, double epsilon, std::optional<double> delta, double K) {
  BoundReport report{};
  report.d = d;
  report.epsilon = epsilon;
  if (!delta) delta = optimize_delta(d, epsilon).delta;
  report.delta = delta;
  const BoundValue lower = lower_bound_cost(d, epsilon, *delta);
  const BoundValue lower_dim = lower_bound_dimension(d, epsilon, *delta);
  report.lower_bits = lower.value;
  report.lower_vacuous = lower.vacuous;
  report.lower_dimension_log2 = lower_dim.value;
  report.lower_dimension_vacuous = lower_dim.vacuous;
  report.upper_bits = upper_bound_cost(d, epsilon);
  report.upper_vacuous = report.upper_bits < 0.0;
  report.table1_rows = table1_rows(d, epsilon, K);
  return report;
}

}  // namespace progcost
