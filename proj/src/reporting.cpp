#include "progcost/reporting.hpp"

#include "progcost/detail/parallel.hpp"
#include "progcost/scoring.hpp"

#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

namespace progcost {

namespace {

using nlohmann::ordered_json;

std::string format12(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return buffer;
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

std::string scalar_text(const ordered_json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_boolean()) return value.get<bool>() ? "true" : "false";
  if (value.is_number_float()) return format12(value.get<double>());
  if (value.is_null()) return "";
  return value.dump();
}

// Flattens nested objects one level ("pass_flags" -> "pass_eq5", ...).
ordered_json flatten(const ordered_json& record) {
  ordered_json flat = ordered_json::object();
  for (const auto& [key, value] : record.items()) {
    if (value.is_object()) {
      const std::string prefix = key == "pass_flags" ? "pass_" : key + "_";
      for (const auto& [inner, v] : value.items()) flat[prefix + inner] = v;
    } else if (!value.is_array()) {
      flat[key] = value;
    }
  }
  return flat;
}

std::string csv_from_records(const std::vector<ordered_json>& records) {
  if (records.empty()) return "";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, value] : records.front().items()) {
    os << (first ? "" : ",") << csv_field(key);
    first = false;
  }
  os << '\n';
  for (const auto& record : records) {
    first = true;
    for (const auto& [key, value] : record.items()) {
      os << (first ? "" : ",") << csv_field(scalar_text(value));
      first = false;
    }
    os << '\n';
  }
  return os.str();
}

ordered_json table_rows_json(const std::vector<TableRow>& rows) {
  ordered_json out = ordered_json::array();
  for (const auto& row : rows)
    out.push_back({{"label", row.label}, {"kind", row.kind}, {"bits", round12(row.bits)}});
  return out;
}

}  // namespace

ProtocolReport protocol_report(long long n, int d) {
  const DiagramSetPtr set = viable_set(n, d);
  const ScoreMatrix score = score_matrix(set);
  const FidelityResult qstar = entanglement_fidelity(sine_weights(set), score);
  const FidelityResult optimal = optimal_fidelity(score);

  ProtocolReport r{};
  r.d = d;
  r.n = n;
  r.N = set->N();
  r.n0 = set->n0();
  r.set_size = set->size();
  r.fidelity_qstar = qstar.fidelity;
  r.fidelity_optimal = optimal.fidelity;
  r.epsilon_qstar = qstar.error;
  r.epsilon_optimal = optimal.error;
  r.dP_exact = 0;
  for (const auto& member : set->members()) {
    const BigInt dim = irrep_dimension(member);
    r.dP_exact += dim * dim;
  }
  r.dP_exact_log2 = log2_big(r.dP_exact);
  r.cP_bits = r.dP_exact_log2;

  const double dd = d;
  const double nn = static_cast<double>(n);
  const double nu = dd * dd - 1.0;
  const double eq5_root = std::numbers::pi * (dd - 1) * (dd - 1) * (3 * dd - 2) / (dd * nn);
  r.bound_eq5 = 2.0 * eq5_root * eq5_root;
  r.bound_eq6_log2 = nu * std::log2(9.0 * nn / (3 * dd - 2));
  r.bound_lemma3 = lemma3_bound(d, n).value;
  r.bound_lemma4_log2 = nu * std::log2(2.0 * (dd - 1) * capacity_cmax(d, n) * nn + 3.0);
  r.corollary_bits = upper_bound_cost(d, r.epsilon_qstar);

  r.pass_flags.eq5 = r.epsilon_qstar <= r.bound_eq5;
  r.pass_flags.eq6 = r.dP_exact_log2 <= r.bound_eq6_log2;
  r.pass_flags.lemma3 = r.fidelity_qstar >= r.bound_lemma3;
  r.pass_flags.lemma4 = r.dP_exact_log2 <= r.bound_lemma4_log2;
  r.pass_flags.corollary = r.cP_bits <= r.corollary_bits;
  r.pass_flags.optimal = r.fidelity_optimal >= r.fidelity_qstar - 1e-12;
  return r;
}

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw PreconditionError("fit_line: size mismatch");
  if (x.size() < 2) throw PreconditionError("fit_line: need at least two points");
  const Eigen::Index m = static_cast<Eigen::Index>(x.size());
  Eigen::MatrixXd design(m, 2);
  Eigen::VectorXd rhs(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    design(i, 0) = x[static_cast<std::size_t>(i)];
    design(i, 1) = 1.0;
    rhs(i) = y[static_cast<std::size_t>(i)];
  }
  const Eigen::Vector2d coef = design.colPivHouseholderQr().solve(rhs);
  const double rms = std::sqrt((design * coef - rhs).squaredNorm() / static_cast<double>(m));
  return {coef(0), coef(1), rms};
}

SweepResult sweep(int d, const std::vector<long long>& n_values) {
  if (n_values.size() < 3) throw PreconditionError("sweep: need at least 3 values of n for a slope fit");
  std::vector<long long> ns = n_values;
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  if (ns.size() < 3) throw PreconditionError("sweep: need at least 3 distinct values of n");
  for (long long n : ns) capacity_parameter(n, d);

  SweepResult result{};
  result.d = d;
  result.reports = detail::map_chunks<ProtocolReport>(
      static_cast<int>(ns.size()), [&](int i) { return protocol_report(ns[static_cast<std::size_t>(i)], d); });

  std::vector<double> log_n, log_eps, log_inv_eps2, cost, log_classical;
  for (const auto& r : result.reports) {
    log_n.push_back(std::log(static_cast<double>(r.n)));
    log_eps.push_back(std::log(r.epsilon_qstar));
    log_inv_eps2.push_back(-std::log2(r.epsilon_qstar));
    cost.push_back(r.cP_bits);
    const double classical = classical_phase_error<double>(static_cast<int>(r.n));
    result.classical_errors.push_back(classical);
    log_classical.push_back(std::log(classical));
  }
  const LineFit quantum = fit_line(log_n, log_eps);
  result.slope = quantum.slope;
  result.intercept = quantum.intercept;
  result.residual = quantum.residual;
  result.cost_slope = fit_line(log_inv_eps2, cost).slope;
  result.classical_slope = fit_line(log_n, log_classical).slope;
  return result;
}

double round12(double value) {
  if (!std::isfinite(value) || value == 0.0) return value;
  return std::stod(format12(value));
}

nlohmann::ordered_json to_json(const ProtocolReport& r) {
  ordered_json j;
  j["d"] = r.d;
  j["n"] = r.n;
  j["N"] = r.N;
  j["n0"] = r.n0;
  j["set_size"] = r.set_size;
  j["fidelity_qstar"] = round12(r.fidelity_qstar);
  j["fidelity_optimal"] = round12(r.fidelity_optimal);
  j["epsilon_qstar"] = round12(r.epsilon_qstar);
  j["epsilon_optimal"] = round12(r.epsilon_optimal);
  j["dP_exact_log2"] = round12(r.dP_exact_log2);
  j["dP_exact"] = to_decimal(r.dP_exact);
  j["cP_bits"] = round12(r.cP_bits);
  j["bound_eq5"] = round12(r.bound_eq5);
  j["bound_eq6_log2"] = round12(r.bound_eq6_log2);
  j["bound_lemma3"] = round12(r.bound_lemma3);
  j["bound_lemma4_log2"] = round12(r.bound_lemma4_log2);
  j["corollary_bits"] = round12(r.corollary_bits);
  j["pass_flags"] = {{"eq5", r.pass_flags.eq5},         {"eq6", r.pass_flags.eq6},
                     {"lemma3", r.pass_flags.lemma3},   {"lemma4", r.pass_flags.lemma4},
                     {"corollary", r.pass_flags.corollary}, {"optimal", r.pass_flags.optimal}};
  return j;
}

nlohmann::ordered_json to_json(const SweepResult& s) {
  ordered_json j;
  j["d"] = s.d;
  j["slope"] = round12(s.slope);
  j["intercept"] = round12(s.intercept);
  j["residual"] = round12(s.residual);
  j["cost_slope"] = round12(s.cost_slope);
  j["classical_slope"] = round12(s.classical_slope);
  j["reports"] = ordered_json::array();
  for (std::size_t i = 0; i < s.reports.size(); ++i) {
    ordered_json row = to_json(s.reports[i]);
    row["classical_error"] = round12(s.classical_errors[i]);
    j["reports"].push_back(std::move(row));
  }
  return j;
}

nlohmann::ordered_json to_json(const BoundReport& r) {
  ordered_json j;
  j["d"] = r.d;
  j["epsilon"] = round12(r.epsilon);
  j["delta"] = r.delta ? ordered_json(round12(*r.delta)) : ordered_json(nullptr);
  j["lower_bits"] = round12(r.lower_bits);
  j["lower_dimension_log2"] = round12(r.lower_dimension_log2);
  j["upper_bits"] = round12(r.upper_bits);
  j["table1_rows"] = table_rows_json(r.table1_rows);
  j["vacuous_flags"] = {{"lower_bits", r.lower_vacuous},
                        {"lower_dimension_log2", r.lower_dimension_vacuous},
                        {"upper_bits", r.upper_vacuous}};
  return j;
}

nlohmann::ordered_json to_json(const PhaseReport& r) {
  ordered_json j;
  j["dP"] = r.dP;
  j["eps_classical"] = round12(r.eps_classical);
  j["eps_quantum"] = round12(r.eps_quantum);
  j["choi_infidelity"] = round12(r.choi_infidelity);
  j["asymptote_ratio"] = round12(r.asymptote_ratio);
  j["multistart_spread"] = round12(r.multistart_spread);
  return j;
}

nlohmann::ordered_json table1_json(int d, double epsilon, double K) {
  ordered_json j;
  j["d"] = d;
  j["epsilon"] = round12(epsilon);
  j["K"] = round12(K);
  j["rows"] = table_rows_json(table1_rows(d, epsilon, K));
  return j;
}

std::string to_csv(const std::vector<ProtocolReport>& reports) {
  std::vector<ordered_json> records;
  for (const auto& r : reports) records.push_back(flatten(to_json(r)));
  return csv_from_records(records);
}

std::string to_csv(const BoundReport& report) {
  ordered_json record = flatten(to_json(report));
  for (const auto& row : report.table1_rows) record[row.label] = round12(row.bits);
  return csv_from_records({record});
}

std::string to_csv(const PhaseReport& report) { return csv_from_records({to_json(report)}); }

std::string to_csv(const std::vector<TableRow>& rows) {
  std::vector<ordered_json> records;
  for (const auto& row : rows)
    records.push_back({{"label", row.label}, {"kind", row.kind}, {"bits", round12(row.bits)}});
  return csv_from_records(records);
}

std::string to_table(const nlohmann::ordered_json& value) {
  std::ostringstream os;
  if (value.is_array()) {
    std::vector<ordered_json> rows;
    for (const auto& item : value) rows.push_back(flatten(item));
    if (rows.empty()) return "";
    std::vector<std::string> keys;
    for (const auto& [key, v] : rows.front().items()) keys.push_back(key);
    std::vector<std::size_t> width;
    for (const auto& key : keys) {
      std::size_t w = key.size();
      for (const auto& row : rows) w = std::max(w, scalar_text(row[key]).size());
      width.push_back(w);
    }
    for (std::size_t c = 0; c < keys.size(); ++c)
      os << (c ? "  " : "") << std::string(width[c] - keys[c].size(), ' ') << keys[c];
    os << '\n';
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < keys.size(); ++c) {
        const std::string text = scalar_text(row[keys[c]]);
        os << (c ? "  " : "") << std::string(width[c] - text.size(), ' ') << text;
      }
      os << '\n';
    }
    return os.str();
  }
  std::size_t width = 0;
  for (const auto& [key, v] : value.items()) width = std::max(width, key.size());
  for (const auto& [key, v] : value.items()) {
    if (v.is_array()) {
      os << key << ":\n" << to_table(v);
    } else if (v.is_object()) {
      for (const auto& [inner, iv] : v.items())
        os << key << '.' << inner << std::string(width > key.size() + inner.size() + 1 ? width - key.size() - inner.size() - 1 : 0, ' ')
           << "  " << scalar_text(iv) << '\n';
    } else {
      os << key << std::string(width - key.size(), ' ') << "  " << scalar_text(v) << '\n';
    }
  }
  return os.str();
}

void write_atomically(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path temp = path;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + temp.string() + " for writing");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("failed writing " + temp.string());
  }
  std::filesystem::rename(temp, path);
}

}  // namespace progcost
