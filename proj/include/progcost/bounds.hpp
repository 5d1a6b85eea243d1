// Cost bounds for universal gate programming, in bits (base-2 logs).
#pragma once

#include "progcost/common.hpp"

#include <optional>
#include <string>
#include <vector>

namespace progcost {

/// Lower bound on program cost for a fixed trade-off parameter delta:
/// (1 - delta - 4 sqrt(2 eps)) (d^2-1) log2(delta / (4 sqrt(2 eps)(d^2-1))) - 1.
BoundValue lower_bound_cost(int d, double epsilon, double delta);

/// log2 of the explicit program-dimension bound
/// (1/2) (delta / (4 sqrt(2 eps)(d^2-1)))^((1 - delta - 4 sqrt(2 eps))(d^2-1)).
BoundValue lower_bound_dimension(int d, double epsilon, double delta);

struct DeltaOptimum {
  double delta;
  double bits;
};

/// Golden-section maximisation of lower_bound_cost over the feasible delta
/// interval. Throws PreconditionError("bound vacuous for all delta") when the
/// interval is empty.
DeltaOptimum optimize_delta(int d, double epsilon);

/// ((d^2-1)/2) log2(162 pi^2 (d-1)^4 / (d^2 eps)).
double upper_bound_cost(int d, double epsilon);

/// Simplified form ((d^2-1)/2) log2(162 pi^2 d^2 / eps); never below
/// upper_bound_cost.
double upper_bound_cost_simplified(int d, double epsilon);

struct TableRow {
  std::string label;
  std::string kind;  // "upper" or "lower"
  double bits;
};

/// Prior-work cost formulas; K is caller-supplied.
std::vector<TableRow> table1_rows(int d, double epsilon, double K);

/// (nu/2) log2(C/eps).
double conjecture_cost(int nu, double epsilon, double C);

struct BoundReport {
  int d;
  double epsilon;
  std::optional<double> delta;
  double lower_bits;
  double lower_dimension_log2;
  double upper_bits;
  std::vector<TableRow> table1_rows;
  bool lower_vacuous;
  bool lower_dimension_vacuous;
  bool upper_vacuous;
};

/// Evaluates every bound. Without `delta` the lower bound uses
/// optimize_delta and reports the optimizer's delta.
BoundReport bound_report(int d, double epsilon, std::optional<double> delta, double K);

}  // namespace progcost
