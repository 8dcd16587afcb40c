#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "albertson/invariants.hpp"

namespace albertson {

/// Campaign sizes for the full verification run. Defaults are the
/// acceptance settings.
struct VerifyConfig {
  std::size_t tree_n = 12;
  std::size_t sweep_n = 7;
  std::uint64_t seed = 20190501;
  std::size_t workers = 1;

  std::size_t delta_cases = 10'000;
  std::size_t transform_cases = 1'000;
  std::size_t family_max_i = 20;
  Index realize_max_t = 60;
  std::size_t realize_count = 5;
  std::size_t stream_order = 1'000;
  std::size_t stream_updates = 10'000;
  std::size_t stream_checkpoints = 100;
  std::size_t codec_max_order = 6;

  // Wall-clock budgets in seconds; zero disables the check.
  double parity_budget = 60.0;
  double trees_budget = 10.0;
  double delta_budget = 30.0;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Runs every criterion in order 1..10. Exceptions inside a criterion are
/// caught and reported as a failure of that criterion.
std::vector<CriterionResult> run_verification(const VerifyConfig& config);

/// "PASS [3] lower bound ... (0.12 s) detail"
std::string format_result(const CriterionResult& result);

}  // namespace albertson
