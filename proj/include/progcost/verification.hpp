// The property suite run by `progcost verify`.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace progcost {

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

struct VerifyOptions {
  long samples = 1'000'000;  // Monte-Carlo Choi samples
  std::uint64_t seed = 0;
};

/// Runs every cross-check; a check that throws is recorded as failed.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

}  // namespace progcost
