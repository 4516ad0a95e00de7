#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "beth/budget.hpp"
#include "beth/cycles.hpp"
#include "beth/graph.hpp"
#include "beth/oracles.hpp"
#include "beth/solids.hpp"

namespace beth {

struct ReportOptions {
  bool oracles = true;
  std::uint64_t budget = kDefaultBudget;  // per oracle call
  std::size_t cycle_cap = kDefaultCycleCap;
};

enum class CheckStatus { pass, fail, skipped };

std::string to_string(CheckStatus s);

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::skipped;
  std::string detail;
};

struct CharacteristicReport {
  std::string graph6;
  int n = 0;
  int m = 0;
  std::int64_t c = 0;
  std::int64_t s = 0;
  std::int64_t beth1 = 0;
  std::int64_t beth2 = 0;
  std::int64_t beth3 = 0;
  int bound1 = 0;
  int bound2 = 0;
  int bound3 = 0;
  std::int64_t odd_cycles = 0;
  // beth1 + 1, the free rank of the fundamental group of the graph.
  std::int64_t pi1_rank = 0;
  std::optional<int> chi;
  std::optional<int> hadwiger;
  std::optional<bool> planar;
  std::optional<std::int64_t> faces;  // |E| - |V| + 2 when planar
  std::optional<Coloring> coloring;
  std::optional<HadwigerResult> minor;
  std::vector<InducedCycle> cycles;
  std::vector<Solid> solids;
  std::vector<Check> checks;
  std::vector<std::string> budget_exceeded;  // oracles that ran out

  const Check* find_check(const std::string& name) const;
  bool any_failed() const;
};

// Throws DisconnectedGraph; oracle budget exhaustion only blanks the fields.
CharacteristicReport make_report(const Graph& g, const ReportOptions& options = {});

nlohmann::ordered_json to_json(const CharacteristicReport& r);
nlohmann::ordered_json solid_json(const Solid& s);

// One CSV column per top-level JSON field, nested values as JSON text.
std::string csv_header(const nlohmann::ordered_json& row);
std::string csv_row(const nlohmann::ordered_json& row);
std::string csv_escape(const std::string& field);

}  // namespace beth
