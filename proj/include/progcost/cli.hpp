// Command-line front end.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace progcost::cli {

enum class Command { bounds, protocol, sweep, phase, table1, verify };
enum class Format { json, csv, table };

struct RunConfig {
  Command command = Command::verify;
  std::optional<int> d;
  std::optional<long long> n;
  std::optional<long long> n_min;
  std::optional<long long> n_max;
  long long n_step = 1;
  std::optional<double> epsilon;
  std::optional<double> delta;
  double K = 1.0;
  std::optional<int> dP;
  std::uint64_t seed = 0;
  long samples = 1'000'000;
  std::optional<std::string> output_path;
  Format format = Format::json;
};

/// Parses flat `key = value` lines; '#' starts a comment. Keys are the long
/// flag names without dashes (d, n, n-min, ..., command).
std::map<std::string, std::string> read_config_file(const std::string& path);

/// Merges config-file values (lower priority) with flag values and validates
/// every field. Throws PreconditionError on unknown keys or bad values.
RunConfig build_config(const std::map<std::string, std::string>& file_values,
                       const std::map<std::string, std::string>& flag_values);

/// Exit codes: 0 success, 1 validation error, 2 verification failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace progcost::cli
