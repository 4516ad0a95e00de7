#include "beth/report.hpp"

#include <algorithm>
#include <tuple>
#include <variant>

#include "beth/characteristics.hpp"
#include "beth/graph_io.hpp"

namespace beth {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::skipped:
      break;
  }
  return "skipped";
}

const Check* CharacteristicReport::find_check(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

bool CharacteristicReport::any_failed() const {
  return std::any_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == CheckStatus::fail; });
}

namespace {

int bound_or_zero(int i, std::int64_t value) {
  if (value < beth_complete(i, 1)) return 0;
  return max_complete_order_within(i, value);
}

// Least k with C(k, d) > count.
int least_exceeding(std::int64_t count, int d) {
  int k = d;
  while (binomial(k, d) <= count) ++k;
  return k;
}

Check verdict(std::string name, bool ok, std::string detail) {
  return Check{std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, std::move(detail)};
}

Check skipped(std::string name, std::string detail) {
  return Check{std::move(name), CheckStatus::skipped, std::move(detail)};
}

std::string str(std::int64_t v) { return std::to_string(v); }

void add_checks(CharacteristicReport& r) {
  auto& out = r.checks;
  const std::string bounds = "(" + str(r.bound1) + "," + str(r.bound2) + "," + str(r.bound3) + ")";
  const int min_bound = std::min({r.bound1, r.bound2, r.bound3});

  const int closed = first_upper_bound_closed_form(r.beth1);
  out.push_back(verdict("bound1_closed_form", closed == r.bound1,
                        "scan=" + str(r.bound1) + " closed_form=" + str(closed)));

  for (const auto& [name, value] : {std::pair{std::string("chi_bounds"), r.chi},
                                    std::pair{std::string("hadwiger_bounds"), r.hadwiger}}) {
    const std::string label = name == "chi_bounds" ? "chi" : "h";
    if (!value) {
      out.push_back(skipped(name, label + " unavailable"));
    } else {
      out.push_back(verdict(name, *value <= min_bound, label + "=" + str(*value) + " bounds=" + bounds));
    }
  }

  std::optional<int> top;
  if (r.chi) top = *r.chi;
  if (r.hadwiger) top = std::max(top.value_or(0), *r.hadwiger);
  for (const auto& [name, count, d] : {std::tuple{std::string("threshold_C"), r.c, 3},
                                       std::tuple{std::string("threshold_S"), r.s, 4}}) {
    if (!top) {
      out.push_back(skipped(name, "chi and h unavailable"));
      continue;
    }
    const int k = least_exceeding(count, d);
    out.push_back(verdict(name, *top < k,
                          "count=" + str(count) + " < C(" + str(k) + "," + str(d) + ") requires max(chi,h)=" +
                              str(*top) + " < " + str(k)));
  }

  if (!r.chi) {
    out.push_back(skipped("odd_cycle_bound", "chi unavailable"));
  } else {
    int n0 = 2;
    while (r.odd_cycles > binomial(n0, 3)) ++n0;
    out.push_back(verdict("odd_cycle_bound", *r.chi <= n0,
                          "odd=" + str(r.odd_cycles) + " <= C(" + str(n0) + ",3) requires chi=" + str(*r.chi) +
                              " <= " + str(n0)));
  }

  if (!r.chi || !r.hadwiger) {
    out.push_back(skipped("hadwiger_equality", "chi or h unavailable"));
  } else {
    const std::int64_t beth[3] = {r.beth1, r.beth2, r.beth3};
    std::string equal;
    for (int i = 1; i <= 3; ++i) {
      if (*r.hadwiger >= 1 && beth_complete(i, *r.hadwiger) == beth[i - 1]) equal += (equal.empty() ? "" : ",") + str(i);
    }
    if (equal.empty()) {
      out.push_back(verdict("hadwiger_equality", true, "no equality"));
    } else {
      out.push_back(verdict("hadwiger_equality", *r.chi <= *r.hadwiger,
                            "equality for i=" + equal + "; chi=" + str(*r.chi) + " h=" + str(*r.hadwiger)));
    }
  }

  out.push_back(verdict("beth3_lower_bound", r.beth3 >= -1, "beth3=" + str(r.beth3)));

  const char* planar_names[] = {"planar_cycle_bound", "planar_solid_lower", "planar_solid_equality"};
  if (!r.planar) {
    for (const char* name : planar_names) out.push_back(skipped(name, "planarity unavailable"));
    return;
  }
  if (!*r.planar) {
    for (const char* name : planar_names) out.push_back(verdict(name, true, "not planar"));
    return;
  }
  const std::int64_t f = *r.faces;
  if (r.c > f + 2) {
    out.push_back(verdict("planar_cycle_bound", true, "c=" + str(r.c) + " > F+2=" + str(f + 2)));
  } else if (!r.chi) {
    out.push_back(skipped("planar_cycle_bound", "chi unavailable"));
  } else {
    out.push_back(verdict("planar_cycle_bound", *r.chi <= 4,
                          "c=" + str(r.c) + " <= F+2=" + str(f + 2) + " requires chi=" + str(*r.chi) + " <= 4"));
  }
  const std::int64_t euler = r.s - r.c + f;
  out.push_back(verdict("planar_solid_lower", euler >= 1, "s-c+F=" + str(euler)));
  if (euler != 1) {
    out.push_back(verdict("planar_solid_equality", true, "s-c+F=" + str(euler) + " != 1"));
  } else if (!r.chi) {
    out.push_back(skipped("planar_solid_equality", "chi unavailable"));
  } else {
    out.push_back(verdict("planar_solid_equality", *r.chi <= 4, "s-c+F=1 requires chi=" + str(*r.chi) + " <= 4"));
  }
}

}  // namespace

CharacteristicReport make_report(const Graph& g, const ReportOptions& options) {
  require_connected(g);
  CharacteristicReport r;
  r.graph6 = g.order() <= 62 ? to_graph6(g) : std::string();
  r.n = g.order();
  r.m = g.size();
  r.cycles = enumerate_induced_cycles(g, options.cycle_cap);
  r.solids = enumerate_solids(g, r.cycles);
  r.c = static_cast<std::int64_t>(r.cycles.size());
  r.s = static_cast<std::int64_t>(r.solids.size());
  r.beth1 = beth1_from(r.n, r.m);
  r.beth2 = beth2_from(r.n, r.m, r.c);
  r.beth3 = beth3_from(r.n, r.m, r.c, r.s);
  r.bound1 = bound_or_zero(1, r.beth1);
  r.bound2 = bound_or_zero(2, r.beth2);
  r.bound3 = bound_or_zero(3, r.beth3);
  r.pi1_rank = r.beth1 + 1;
  r.odd_cycles = std::count_if(r.cycles.begin(), r.cycles.end(), [](const InducedCycle& c) { return c.length() % 2 == 1; });

  if (options.oracles) {
    try {
      SearchBudget budget(options.budget, "chromatic number");
      r.coloring = chromatic_number(g, budget);
      r.chi = r.coloring->k;
    } catch (const BudgetExceeded&) {
      r.budget_exceeded.push_back("chi");
    } catch (const GraphError&) {
      r.budget_exceeded.push_back("chi");
    }
    try {
      SearchBudget budget(options.budget, "hadwiger number");
      r.minor = hadwiger_number(g, budget);
      r.hadwiger = r.minor->t;
    } catch (const BudgetExceeded&) {
      r.budget_exceeded.push_back("hadwiger");
    }
    try {
      SearchBudget budget(options.budget, "planarity");
      r.planar = is_planar_small(g, budget);
      if (*r.planar) r.faces = static_cast<std::int64_t>(r.m) - r.n + 2;
    } catch (const BudgetExceeded&) {
      r.budget_exceeded.push_back("planar");
    }
  }
  add_checks(r);
  return r;
}

namespace {

nlohmann::ordered_json vertex_list(VertexSet s) { return members(s); }

template <class T>
nlohmann::ordered_json optional_json(const std::optional<T>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

}  // namespace

nlohmann::ordered_json solid_json(const Solid& s) {
  nlohmann::ordered_json features;
  std::visit(
      [&](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Pyramid>) {
          features["apex"] = k.apex;
        } else if constexpr (std::is_same_v<K, Trihedron>) {
          features["x"] = k.x;
          features["y"] = k.y;
        } else if constexpr (std::is_same_v<K, Stamp>) {
          features["triangle"] = k.triangle;
          features["meet"] = k.meet;
        } else {
          features["top"] = k.top;
          features["bottom"] = k.bottom;
        }
      },
      s.kind);
  nlohmann::ordered_json out;
  out["kind"] = kind_name(s.kind);
  out["vertices"] = vertex_list(s.vertices);
  out["features"] = features;
  return out;
}

nlohmann::ordered_json to_json(const CharacteristicReport& r) {
  nlohmann::ordered_json j;
  j["graph6"] = r.graph6;
  j["n"] = r.n;
  j["m"] = r.m;
  j["c"] = r.c;
  j["s"] = r.s;
  j["beth1"] = r.beth1;
  j["beth2"] = r.beth2;
  j["beth3"] = r.beth3;
  j["bound1"] = r.bound1;
  j["bound2"] = r.bound2;
  j["bound3"] = r.bound3;
  j["chi"] = optional_json(r.chi);
  j["hadwiger"] = optional_json(r.hadwiger);
  j["planar"] = optional_json(r.planar);
  j["faces"] = optional_json(r.faces);
  j["odd_cycles"] = r.odd_cycles;
  j["pi1_rank"] = r.pi1_rank;
  j["coloring"] = r.coloring ? nlohmann::ordered_json(r.coloring->color) : nlohmann::ordered_json(nullptr);
  if (r.minor) {
    nlohmann::ordered_json m;
    m["branch_sets"] = nlohmann::ordered_json::array();
    for (VertexSet s : r.minor->witness.branch_sets) m["branch_sets"].push_back(vertex_list(s));
    if (r.minor->contraction_sequence) {
      m["contraction_sequence"] = nlohmann::ordered_json::array();
      for (const auto& e : *r.minor->contraction_sequence) m["contraction_sequence"].push_back({e.u, e.v});
    } else {
      m["contraction_sequence"] = nullptr;
    }
    j["minor"] = m;
  } else {
    j["minor"] = nullptr;
  }
  j["cycles"] = nlohmann::ordered_json::array();
  for (const auto& c : r.cycles) j["cycles"].push_back(c.vertices());
  j["solids"] = nlohmann::ordered_json::array();
  for (const auto& s : r.solids) j["solids"].push_back(solid_json(s));
  nlohmann::ordered_json checks = nlohmann::ordered_json::object();
  for (const auto& c : r.checks) checks[c.name] = {{"status", to_string(c.status)}, {"detail", c.detail}};
  j["checks"] = checks;
  j["budget_exceeded"] = r.budget_exceeded;
  return j;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string csv_header(const nlohmann::ordered_json& row) {
  std::string out;
  for (const auto& [key, value] : row.items()) out += (out.empty() ? "" : ",") + csv_escape(key);
  return out;
}

std::string csv_row(const nlohmann::ordered_json& row) {
  std::string out;
  bool first = true;
  for (const auto& [key, value] : row.items()) {
    std::string cell;
    if (value.is_null()) {
      cell = "";
    } else if (value.is_string()) {
      cell = value.get<std::string>();
    } else {
      cell = value.dump();
    }
    if (!first) out += ',';
    out += csv_escape(cell);
    first = false;
  }
  return out;
}

}  // namespace beth
