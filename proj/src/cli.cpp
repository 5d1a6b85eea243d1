#include "progcost/cli.hpp"

#include "progcost/bounds.hpp"
#include "progcost/reporting.hpp"
#include "progcost/verification.hpp"

#include <CLI11.hpp>

#include <array>
#include <charconv>
#include <fstream>
#include <iostream>
#include <set>

namespace progcost::cli {

namespace {

const std::set<std::string> kKeys = {"command", "d",     "n",    "n-min",   "n-max",  "n-step", "eps",
                                     "delta",   "K",     "dp",   "seed",    "samples", "format", "output"};

template <typename Int>
Int parse_int(const std::string& key, const std::string& text) {
  Int value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw PreconditionError("invalid integer for " + key + ": '" + text + "'");
  return value;
}

double parse_real(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || !std::isfinite(value))
    throw PreconditionError("invalid number for " + key + ": '" + text + "'");
  return value;
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

Command parse_command(const std::string& text) {
  static const std::map<std::string, Command> commands = {
      {"bounds", Command::bounds}, {"protocol", Command::protocol}, {"sweep", Command::sweep},
      {"phase", Command::phase},   {"table1", Command::table1},     {"verify", Command::verify}};
  const auto it = commands.find(text);
  if (it == commands.end()) throw PreconditionError("unknown command '" + text + "'");
  return it->second;
}

Format parse_format(const std::string& text) {
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  if (text == "table") return Format::table;
  throw PreconditionError("unknown format '" + text + "' (expected json, csv or table)");
}

template <typename T>
const T& require(const std::optional<T>& value, const std::string& flag, const std::string& command) {
  if (!value) throw PreconditionError(command + " requires --" + flag);
  return *value;
}

std::string render(const nlohmann::ordered_json& json, const std::string& csv, Format format) {
  switch (format) {
    case Format::json:
      return json.dump(2) + "\n";
    case Format::csv:
      return csv;
    case Format::table:
      return to_table(json);
  }
  return {};
}

}  // namespace

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot read config file " + path);
  std::map<std::string, std::string> values;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw PreconditionError(path + ":" + std::to_string(number) + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    if (!kKeys.count(key))
      throw PreconditionError(path + ":" + std::to_string(number) + ": unknown key '" + key + "'");
    values[key] = trim(line.substr(eq + 1));
  }
  return values;
}

RunConfig build_config(const std::map<std::string, std::string>& file_values,
                       const std::map<std::string, std::string>& flag_values) {
  std::map<std::string, std::string> merged = file_values;
  for (const auto& [key, value] : flag_values) merged[key] = value;

  RunConfig config;
  for (const auto& [key, value] : merged) {
    if (!kKeys.count(key)) throw PreconditionError("unknown key '" + key + "'");
    if (key == "command") config.command = parse_command(value);
    else if (key == "d") config.d = parse_int<int>(key, value);
    else if (key == "n") config.n = parse_int<long long>(key, value);
    else if (key == "n-min") config.n_min = parse_int<long long>(key, value);
    else if (key == "n-max") config.n_max = parse_int<long long>(key, value);
    else if (key == "n-step") config.n_step = parse_int<long long>(key, value);
    else if (key == "eps") config.epsilon = parse_real(key, value);
    else if (key == "delta") config.delta = parse_real(key, value);
    else if (key == "K") config.K = parse_real(key, value);
    else if (key == "dp") config.dP = parse_int<int>(key, value);
    else if (key == "seed") config.seed = parse_int<std::uint64_t>(key, value);
    else if (key == "samples") config.samples = parse_int<long>(key, value);
    else if (key == "format") config.format = parse_format(value);
    else if (key == "output") config.output_path = value;
  }
  if (!merged.count("command")) throw PreconditionError("missing command");

  if (config.d && *config.d < 2) throw PreconditionError("d must be >= 2");
  if (config.n && *config.n < 1) throw PreconditionError("n must be positive");
  if (config.n_step < 1) throw PreconditionError("n-step must be >= 1");
  if (config.n_min && config.n_max && *config.n_min > *config.n_max)
    throw PreconditionError("n-min must not exceed n-max");
  if (config.epsilon && !(*config.epsilon > 0.0 && *config.epsilon < 1.0))
    throw PreconditionError("eps must lie in (0, 1)");
  if (config.delta && !(*config.delta > 0.0 && *config.delta < 1.0))
    throw PreconditionError("delta must lie in (0, 1)");
  if (!(config.K > 0.0)) throw PreconditionError("K must be positive");
  if (config.dP && *config.dP < 2) throw PreconditionError("dp must be >= 2");
  if (config.samples < 100'000) throw PreconditionError("samples must be >= 100000");
  return config;
}

namespace {

int dispatch(const RunConfig& config, std::ostream& out) {
  std::string content;
  int status = 0;
  switch (config.command) {
    case Command::bounds: {
      const int d = require(config.d, "d", "bounds");
      const double eps = require(config.epsilon, "eps", "bounds");
      const BoundReport report = bound_report(d, eps, config.delta, config.K);
      if (!report.lower_vacuous && report.lower_bits > report.upper_bits)
        status = 2;
      content = render(to_json(report), to_csv(report), config.format);
      break;
    }
    case Command::protocol: {
      const ProtocolReport report =
          protocol_report(require(config.n, "n", "protocol"), require(config.d, "d", "protocol"));
      if (!report.pass_flags.all()) status = 2;
      content = render(to_json(report), to_csv(std::vector{report}), config.format);
      break;
    }
    case Command::sweep: {
      const int d = require(config.d, "d", "sweep");
      std::vector<long long> ns;
      for (long long n = require(config.n_min, "n-min", "sweep"); n <= require(config.n_max, "n-max", "sweep");
           n += config.n_step)
        ns.push_back(n);
      const SweepResult result = sweep(d, ns);
      for (const auto& r : result.reports)
        if (!r.pass_flags.all()) status = 2;
      const auto json = to_json(result);
      if (config.format == Format::table) {
        content = to_table(json["reports"]);
        for (const char* key : {"slope", "intercept", "residual", "cost_slope", "classical_slope"})
          content += std::string(key) + "  " + json[key].dump() + "\n";
      } else {
        content = render(json, to_csv(result.reports), config.format);
      }
      break;
    }
    case Command::phase: {
      const PhaseReport report = phase_report(require(config.dP, "dp", "phase"), config.seed);
      content = render(to_json(report), to_csv(report), config.format);
      break;
    }
    case Command::table1: {
      const int d = require(config.d, "d", "table1");
      const double eps = require(config.epsilon, "eps", "table1");
      const auto json = table1_json(d, eps, config.K);
      content = config.format == Format::table ? to_table(json["rows"])
                                               : render(json, to_csv(table1_rows(d, eps, config.K)), config.format);
      break;
    }
    case Command::verify: {
      const auto checks = run_verification({config.samples, config.seed});
      nlohmann::ordered_json json = nlohmann::ordered_json::array();
      std::string text;
      for (const auto& check : checks) {
        if (!check.passed) status = 2;
        json.push_back({{"check", check.name}, {"passed", check.passed}, {"detail", check.detail}});
        text += std::string(check.passed ? "PASS" : "FAIL") + "  " + check.name + ": " + check.detail + "\n";
      }
      if (config.format == Format::json) content = json.dump(2) + "\n";
      else if (config.format == Format::csv) {
        content = "check,passed,detail\n";
        for (const auto& c : checks)
          content += "\"" + c.name + "\"," + (c.passed ? "true" : "false") + ",\"" + c.detail + "\"\n";
      } else {
        content = text;
      }
      break;
    }
  }
  if (config.output_path) write_atomically(*config.output_path, content);
  else out << content;
  return status;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Program-size / accuracy trade-off for universal gate programming"};
  std::string command;
  app.add_option("command", command, "bounds | protocol | sweep | phase | table1 | verify");

  std::map<std::string, std::string> flags;
  std::string config_path;
  const std::array<std::pair<const char*, const char*>, 13> options = {{
      {"d", "gate dimension"},
      {"n", "number of gate uses"},
      {"n-min", "first n of a sweep"},
      {"n-max", "last n of a sweep"},
      {"n-step", "sweep stride (default 1)"},
      {"eps", "target error in (0, 1)"},
      {"delta", "trade-off parameter of the lower bound (optimised when absent)"},
      {"K", "universal constant for prior-work formulas (default 1, caller-supplied)"},
      {"dp", "program dimension for the phase-gate example"},
      {"seed", "seed for randomised searches (default 0)"},
      {"samples", "Monte-Carlo samples for verify (default 1000000)"},
      {"format", "json | csv | table (default json)"},
      {"output", "write to this file (atomically) instead of stdout"},
  }};
  std::map<std::string, std::string> raw;
  for (const auto& [name, help] : options) app.add_option(std::string("--") + name, raw[name], help);
  app.add_option("--config", config_path, "key = value file; flags override its values");

  std::vector<std::string> argv_storage{"progcost"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    for (const auto& [name, help] : options)
      if (app.count(std::string("--") + name)) flags[name] = raw[name];
    if (!command.empty()) flags["command"] = command;
    const auto file_values = config_path.empty() ? std::map<std::string, std::string>{} : read_config_file(config_path);
    const RunConfig config = build_config(file_values, flags);
    const int status = dispatch(config, out);
    if (status == 2) err << "error: verification failure (see report)\n";
    return status;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const VerificationError& e) {
    err << "verification failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace progcost::cli
