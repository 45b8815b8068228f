#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bgpc {

struct SuiteOptions {
  std::uint64_t seed = 1;               // criterion k draws from seed + k
  std::optional<std::size_t> trials;    // replaces every per-suite trial count
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = true;
  double seconds = 0;
  double limit = 0;     // runtime allowance in seconds; exceeding it fails the criterion
  std::string summary;
  std::vector<std::string> lines;  // verdicts and diagnostics
};

/// Criteria 1-10. Group names: core (1-4, 10), tropical (5, 6), matrices
/// (7-9), all. Throws Usage for other names.
std::vector<int> suite_criteria(const std::string& suite);
CriterionResult run_criterion(int id, const SuiteOptions& opts = {});

/// Exercises every public operation once and reports the ones that failed.
CriterionResult run_coverage(const SuiteOptions& opts = {});

/// `criterion <id> PASS|FAIL <name> runtime=<s>s limit=<s>s <summary>`
std::string format_result(const CriterionResult& r);

}  // namespace bgpc
