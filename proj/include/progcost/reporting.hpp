// Protocol reports, sweeps, and serialization to JSON / CSV / text tables.
#pragma once

#include "progcost/bounds.hpp"
#include "progcost/phase.hpp"
#include "progcost/protocol.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace progcost {

struct PassFlags {
  bool eq5 = false;        // achieved error <= 2(pi(d-1)^2(3d-2)/(dn))^2
  bool eq6 = false;        // dP <= (9n/(3d-2))^(d^2-1)
  bool lemma3 = false;     // F(q*) >= 1 - 2(pi(d-1)/(d c_min n))^2
  bool lemma4 = false;     // dP <= (2(d-1) c_max n + 3)^(d^2-1)
  bool corollary = false;  // cost <= closed-form upper bound at the achieved error
  bool optimal = false;    // optimal fidelity >= F(q*)

  bool all() const { return eq5 && eq6 && lemma3 && lemma4 && corollary && optimal; }
};

struct ProtocolReport {
  int d;
  long long n;
  int N;
  long long n0;
  long long set_size;
  double fidelity_qstar;
  double fidelity_optimal;
  double epsilon_qstar;
  double epsilon_optimal;
  double dP_exact_log2;
  BigInt dP_exact;
  double cP_bits;
  double bound_eq5;
  double bound_eq6_log2;
  double bound_lemma3;
  double bound_lemma4_log2;
  double corollary_bits;
  PassFlags pass_flags;
};

ProtocolReport protocol_report(long long n, int d);

struct SweepResult {
  int d;
  std::vector<ProtocolReport> reports;
  double slope;      // least-squares slope of log(eps_qstar) vs log(n)
  double intercept;
  double residual;   // RMS residual of that fit
  double cost_slope; // slope of cP_bits vs log2(1/eps_qstar)
  std::vector<double> classical_errors;  // interval-mesh error with n cells
  double classical_slope;
};

/// Evaluates reports in parallel; output ordered by n. Needs >= 3 points.
SweepResult sweep(int d, const std::vector<long long>& n_values);

struct LineFit {
  double slope;
  double intercept;
  double residual;
};

/// Ordinary least squares y = slope x + intercept.
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

/// Rounds to 12 significant digits so printed values are stable.
double round12(double value);

nlohmann::ordered_json to_json(const ProtocolReport& report);
nlohmann::ordered_json to_json(const SweepResult& result);
nlohmann::ordered_json to_json(const BoundReport& report);
nlohmann::ordered_json to_json(const PhaseReport& report);
nlohmann::ordered_json table1_json(int d, double epsilon, double K);

/// CSV with a header row and one row per record, columns in field order.
std::string to_csv(const std::vector<ProtocolReport>& reports);
std::string to_csv(const BoundReport& report);
std::string to_csv(const PhaseReport& report);
std::string to_csv(const std::vector<TableRow>& rows);

/// Aligned plain-text rendering of a JSON object or array of flat objects.
std::string to_table(const nlohmann::ordered_json& value);

/// Writes through a temporary file in the same directory, then renames.
void write_atomically(const std::filesystem::path& path, const std::string& content);

}  // namespace progcost
