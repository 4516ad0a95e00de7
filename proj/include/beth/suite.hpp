#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "beth/budget.hpp"
#include "beth/graph.hpp"

namespace beth {

struct SuiteConfig {
  std::vector<std::string> checks;  // empty = all
  std::uint64_t budget = kDefaultBudget;  // per oracle call
  std::uint64_t seed = 0;  // for randomized constructions
  std::size_t realizations = 4;  // colourings tried per vertex compression
  unsigned jobs = 1;
};

struct CheckResult {
  std::string check;
  std::string graph;  // graph6
  std::string status;  // pass | fail | skipped-budget
  std::string detail;  // JSON text; on failure, the replayable witness
};

struct SuiteSummary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skipped = 0;
};

const std::vector<std::string>& all_check_ids();
bool is_check_id(const std::string& id);
// Whether the check needs an exact oracle (and so is skipped on a tiny budget).
bool is_oracle_check(const std::string& id);

// One result per enabled check, in check-id order. Throws
// std::invalid_argument on an unknown id.
std::vector<CheckResult> run_checks(const Graph& g, const SuiteConfig& config);
// Graph-major, check-minor order, independent of config.jobs.
std::vector<CheckResult> run_suite(const std::vector<Graph>& corpus, const SuiteConfig& config);

SuiteSummary summarize(const std::vector<CheckResult>& results);
std::string summary_line(const SuiteSummary& s);

nlohmann::ordered_json to_json(const CheckResult& r);

}  // namespace beth
