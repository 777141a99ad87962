#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace slval {

struct CriterionResult {
  int id = 0;
  std::string group;
  std::string title;
  bool pass = false;
  /// Headline measurement compared against `threshold`.
  double measured = 0.0;
  double threshold = 0.0;
  double seconds = 0.0;
  double time_limit = 0.0;
  /// Criterion-specific measurements.
  nlohmann::json detail;
};

struct SuiteOptions {
  std::uint64_t seed = 20240521;
  /// Group names to run; empty runs everything.
  std::vector<std::string> only;
};

/// Group names in criterion order: algebra, exp, ode, distance, causal, cut,
/// hermitian, abnormal, isometry, triangle.
const std::vector<std::string>& group_names();

/// Each criterion draws from its own stream seeded by (seed, id), so a
/// filtered run reproduces the corresponding entries of a full run.
std::vector<CriterionResult> run_suite(const SuiteOptions& opts);

/// Machine-readable report. Wall-clock times are left out to keep the output
/// reproducible; only the time-limit verdict is kept.
nlohmann::json to_json(const std::vector<CriterionResult>& results, const SuiteOptions& opts);

/// One line per criterion: "PASS  3 ode  ...".
std::string summary_line(const CriterionResult& r);

}  // namespace slval
