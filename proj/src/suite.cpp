#include "beth/suite.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <stdexcept>
#include <thread>

#include "beth/characteristics.hpp"
#include "beth/cycles.hpp"
#include "beth/graph_io.hpp"
#include "beth/operations.hpp"
#include "beth/oracles.hpp"
#include "beth/report.hpp"
#include "beth/solids.hpp"
#include "beth/surfaces.hpp"

namespace beth {

namespace {

using json = nlohmann::ordered_json;

const std::vector<std::string> kCheckIds = {
    "edge-monotonicity-b1",
    "edge-monotonicity-b2",
    "edge-monotonicity-b3",
    "compression-monotonicity-b2",
    "compression-monotonicity-b3",
    "census-identity",
    "edge-count-identity",
    "nonedge-count-identity",
    "nonedge-beth1-identity",
    "cone-C",
    "cone-S",
    "solids-equal-surfaces",
    "chi-bounds",
    "h-bounds",
    "thresholds",
    "odd-cycle-bound",
    "beth3-lower-bound",
    "hadwiger-class-ops",
    "equality-implies-hadwiger",
    "planar-corollaries",
    "longest-cycle-contraction",
    "hadwiger-longest-cycle",
};

const std::vector<std::string> kOracleChecks = {
    "compression-monotonicity-b2", "compression-monotonicity-b3", "solids-equal-surfaces", "chi-bounds",
    "h-bounds", "thresholds", "odd-cycle-bound", "hadwiger-class-ops", "equality-implies-hadwiger",
    "planar-corollaries", "hadwiger-longest-cycle",
};

struct Cells {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t c = 0;
  std::int64_t s = 0;

  std::int64_t beth(int i) const {
    switch (i) {
      case 1:
        return beth1_from(n, m);
      case 2:
        return beth2_from(n, m, c);
      default:
        return beth3_from(n, m, c, s);
    }
  }
};

Cells cells(const Graph& g, int level = 3) {
  Cells out{g.order(), g.size(), 0, 0};
  if (level >= 2) {
    const auto cycles = enumerate_induced_cycles(g);
    out.c = static_cast<std::int64_t>(cycles.size());
    if (level >= 3) out.s = static_cast<std::int64_t>(enumerate_solids(g, cycles).size());
  }
  return out;
}

json edge_json(EdgeRef e) { return json::array({e.u, e.v}); }

// Outcome of one check on one graph; the first violation is kept as witness.
struct Outcome {
  bool failed = false;
  json detail = json::object();
  std::size_t cases = 0;
  std::size_t violations = 0;

  void record(bool ok, const std::function<json()>& witness) {
    ++cases;
    if (ok) return;
    if (!failed) detail["witness"] = witness();
    failed = true;
    ++violations;
  }
};

std::vector<std::pair<Vertex, Vertex>> nonedges(const Graph& g) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.has_edge(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

void cliques_of_size(const Graph& g, int r, std::vector<Vertex>& cur, Vertex from,
                     std::vector<std::vector<Vertex>>& out) {
  if (static_cast<int>(cur.size()) == r) {
    out.push_back(cur);
    return;
  }
  for (Vertex v = from; v < g.order(); ++v) {
    if (std::all_of(cur.begin(), cur.end(), [&](Vertex u) { return g.has_edge(u, v); })) {
      cur.push_back(v);
      cliques_of_size(g, r, cur, v + 1, out);
      cur.pop_back();
    }
  }
}

std::vector<std::vector<Vertex>> cliques_of_size(const Graph& g, int r) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> cur;
  cliques_of_size(g, r, cur, 0, out);
  return out;
}

class GraphChecks {
 public:
  GraphChecks(const Graph& g, const SuiteConfig& config) : g_(g), config_(config) {}

  Outcome run(const std::string& id) {
    if (id.rfind("edge-monotonicity-b", 0) == 0) return edge_monotonicity(id.back() - '0');
    if (id.rfind("compression-monotonicity-b", 0) == 0) return compression_monotonicity(id.back() - '0');
    if (id == "census-identity") return census_identity();
    if (id == "edge-count-identity") return edge_count_identity();
    if (id == "nonedge-count-identity") return nonedge_count_identity();
    if (id == "nonedge-beth1-identity") return nonedge_beth1_identity();
    if (id == "cone-C" || id == "cone-S") return cone_identity(id == "cone-S");
    if (id == "solids-equal-surfaces") return solids_equal_surfaces();
    if (id == "chi-bounds") return from_report({"chi_bounds"});
    if (id == "h-bounds") return from_report({"hadwiger_bounds"});
    if (id == "thresholds") return from_report({"threshold_C", "threshold_S"});
    if (id == "odd-cycle-bound") return from_report({"odd_cycle_bound"});
    if (id == "beth3-lower-bound") return from_report({"beth3_lower_bound"});
    if (id == "equality-implies-hadwiger") return from_report({"hadwiger_equality"});
    if (id == "planar-corollaries") {
      return from_report({"planar_cycle_bound", "planar_solid_lower", "planar_solid_equality"});
    }
    if (id == "hadwiger-class-ops") return hadwiger_class_ops();
    if (id == "longest-cycle-contraction") return longest_cycle_contraction();
    if (id == "hadwiger-longest-cycle") return hadwiger_longest_cycle();
    throw std::invalid_argument("unknown check id: " + id);
  }

 private:
  const Cells& base() {
    if (!base_) base_ = cells(g_);
    return *base_;
  }

  Outcome edge_monotonicity(int i) {
    Outcome out;
    const std::int64_t before = base().beth(i);
    for (const EdgeRef& e : g_.edges()) {
      const Graph h = contract_edge(g_, e).graph;
      const std::int64_t after = cells(h, i).beth(i);
      out.record(after <= before, [&] {
        return json{{"edge", edge_json(e)}, {"beth_G", before}, {"beth_G_e", after}};
      });
    }
    return out;
  }

  Outcome compression_monotonicity(int i) {
    Outcome out;
    const std::int64_t before = base().beth(i);
    for (Vertex w = 0; w < g_.order(); ++w) {
      SearchBudget budget(config_.budget, "vertex compression");
      const auto realizations = vertex_compressions(g_, w, config_.realizations, budget);
      for (std::size_t k = 0; k < realizations.size(); ++k) {
        const Compression& c = realizations[k];
        const std::int64_t after = cells(c.graph, i).beth(i);
        out.record(after <= before, [&] {
          json classes = json::array();
          for (VertexSet s : c.classes) classes.push_back(members(s));
          return json{{"vertex", w}, {"realization", k}, {"classes", classes}, {"result", to_graph6(c.graph)},
                      {"beth_G", before}, {"beth_G_w", after}};
        });
      }
    }
    return out;
  }

  Outcome census_identity() {
    Outcome out;
    const std::int64_t c = base().c;
    std::int64_t largest = 0;
    for (const EdgeRef& e : g_.edges()) {
      const ContractionCensus census = contraction_cycle_census(g_, e);
      const std::int64_t after = static_cast<std::int64_t>(count_induced_cycles(contract_edge(g_, e).graph));
      largest = std::max(largest, census.largest_class);
      out.record(census.total() == c - after, [&] {
        return json{{"edge", edge_json(e)}, {"c3", census.c3}, {"s1", census.s1}, {"s2", census.s2},
                    {"largest_class", census.largest_class}, {"C_G", c}, {"C_G_e", after}};
      });
    }
    out.detail["largest_class"] = largest;
    return out;
  }

  Outcome edge_count_identity() {
    Outcome out;
    for (const EdgeRef& e : g_.edges()) {
      const int lost = g_.size() - contract_edge(g_, e).graph.size();
      const int triangles = count_triangles_through_edge(g_, e);
      out.record(lost == triangles + 1, [&] {
        return json{{"edge", edge_json(e)}, {"edges_lost", lost}, {"triangles", triangles}};
      });
    }
    return out;
  }

  // |E(G)| - |E(G/uv)| = |D_uv|: one edge lost per common neighbour.
  Outcome nonedge_count_identity() {
    Outcome out;
    for (const auto& [u, v] : nonedges(g_)) {
      const int lost = g_.size() - contract_nonedge(g_, u, v).graph.size();
      const int paths = count_length2_paths(g_, u, v);
      out.record(lost == paths, [&, u = u, v = v] {
        return json{{"nonedge", json::array({u, v})}, {"edges_lost", lost}, {"D_uv", paths}};
      });
    }
    return out;
  }

  // beth1(G/uv) - beth1(G) = -|D_uv| as literally stated.
  Outcome nonedge_beth1_identity() {
    Outcome out;
    const std::int64_t before = beth1_from(g_.order(), g_.size());
    for (const auto& [u, v] : nonedges(g_)) {
      const Graph h = contract_nonedge(g_, u, v).graph;
      const std::int64_t diff = beth1_from(h.order(), h.size()) - before;
      const int paths = count_length2_paths(g_, u, v);
      out.record(diff == -paths, [&, u = u, v = v] {
        return json{{"nonedge", json::array({u, v})}, {"beth1_difference", diff}, {"D_uv", paths}};
      });
    }
    return out;
  }

  Outcome cone_identity(bool solids) {
    Outcome out;
    const Cone cn = cone(g_);
    const Cells after = cells(cn.graph, solids ? 3 : 2);
    const Cells& b = base();
    if (solids) {
      out.record(after.s == b.s + b.c, [&] { return json{{"S_cone", after.s}, {"S_G", b.s}, {"C_G", b.c}}; });
    } else {
      out.record(after.c == b.c + b.m, [&] { return json{{"C_cone", after.c}, {"C_G", b.c}, {"E_G", b.m}}; });
    }
    return out;
  }

  Outcome solids_equal_surfaces() {
    Outcome out;
    if (g_.order() > kSurfaceMaxOrder || g_.order() > kBruteforceSolidMaxOrder) {
      throw BudgetExceeded("graph too large for the surface oracle");
    }
    const auto cycles = enumerate_induced_cycles(g_);
    if (cycles.size() > kSurfaceMaxCycles) throw BudgetExceeded("too many induced cycles for the surface oracle");
    SearchBudget budget(config_.budget, "minimal closed surfaces");
    const auto surfaces = enumerate_minimal_closed_surfaces(g_, budget);
    std::vector<VertexSet> minimal;
    std::size_t weak = 0;
    for (const auto& m : surfaces) {
      minimal.push_back(m.vertices);
      if (!m.strongly_minimal) ++weak;
    }
    const auto produced = solid_vertex_sets(enumerate_solids(g_, cycles));
    const auto brute = solid_vertex_sets(enumerate_solids_bruteforce(g_));
    auto lists = [](const std::vector<VertexSet>& sets) {
      json a = json::array();
      for (VertexSet s : sets) a.push_back(members(s));
      return a;
    };
    out.record(produced == brute && produced == minimal, [&] {
      return json{{"solids", lists(produced)}, {"bruteforce", lists(brute)}, {"minimal_surfaces", lists(minimal)}};
    });
    out.detail["not_strongly_minimal"] = weak;
    return out;
  }

  Outcome from_report(const std::vector<std::string>& names) {
    if (!report_) {
      ReportOptions options;
      options.budget = config_.budget;
      report_ = make_report(g_, options);
    }
    Outcome out;
    bool skipped = false;
    for (const auto& name : names) {
      const Check* c = report_->find_check(name);
      if (!c || c->status == CheckStatus::skipped) {
        skipped = true;
        out.detail[name] = c ? c->detail : "missing";
        continue;
      }
      out.record(c->status == CheckStatus::pass, [&] { return json{{"check", name}, {"detail", c->detail}}; });
      if (c->status == CheckStatus::pass) out.detail[name] = c->detail;
    }
    if (skipped && !out.failed) throw BudgetExceeded("oracle unavailable");
    return out;
  }

  struct ChiH {
    int chi;
    int h;
  };

  ChiH chi_h(const Graph& g) {
    SearchBudget b1(config_.budget, "chromatic number");
    SearchBudget b2(config_.budget, "hadwiger number");
    return {chromatic_number(g, b1).k, hadwiger_number(g, b2).t};
  }

  Outcome hadwiger_class_ops() {
    Outcome out;
    const ChiH base = chi_h(g_);
    if (base.chi > base.h) {
      out.detail["note"] = "input not in the Hadwiger class";
      return out;
    }
    std::mt19937_64 rng(config_.seed ^ fnv1a(to_graph6(g_)));
    auto check = [&](const std::string& op, const Graph& result, json args) {
      const ChiH r = chi_h(result);
      out.record(r.chi <= r.h, [&] {
        args["op"] = op;
        args["result"] = to_graph6(result);
        args["chi"] = r.chi;
        args["h"] = r.h;
        return args;
      });
    };

    for (const EdgeRef& e : g_.edges()) {
      if (is_cut_edge(g_, e)) check("cut-edge-deletion", delete_edge(g_, e), json{{"edge", edge_json(e)}});
    }

    // Partner: a small random connected graph, itself checked for membership.
    Graph partner;
    for (int attempt = 0; attempt < 8; ++attempt) {
      partner = random_connected_graph(3 + static_cast<int>(rng() % 3), 0.6, rng());
      const ChiH p = chi_h(partner);
      if (p.chi <= p.h) break;
    }
    const std::string partner6 = to_graph6(partner);

    const int r = 1 + static_cast<int>(rng() % 3);
    const auto mine = cliques_of_size(g_, r);
    const auto theirs = cliques_of_size(partner, r);
    if (!mine.empty() && !theirs.empty()) {
      const auto& a = mine[rng() % mine.size()];
      const auto& b = theirs[rng() % theirs.size()];
      std::vector<std::pair<Vertex, Vertex>> pairs;
      for (int i = 0; i < r; ++i) pairs.emplace_back(a[i], b[i]);
      check("clique-sum", clique_sum(g_, partner, pairs),
            json{{"partner", partner6}, {"clique_G", a}, {"clique_partner", b}});
    }

    const auto edges = g_.edges();
    const auto partner_edges = partner.edges();
    if (!edges.empty() && !partner_edges.empty()) {
      const EdgeRef e1 = edges[rng() % edges.size()];
      const EdgeRef e2 = partner_edges[rng() % partner_edges.size()];
      const bool flip1 = rng() % 2;
      const bool flip2 = rng() % 2;
      const Vertex x1 = flip1 ? e1.v : e1.u;
      const Vertex y1 = flip1 ? e1.u : e1.v;
      const Vertex x2 = flip2 ? e2.v : e2.u;
      const Vertex y2 = flip2 ? e2.u : e2.v;
      check("hajos", hajos_merge(g_, partner, x1, y1, x2, y2),
            json{{"partner", partner6}, {"x1", x1}, {"y1", y1}, {"x2", x2}, {"y2", y2}});

      const EdgeRef e = edges[rng() % edges.size()];
      const int k = 2 + static_cast<int>(rng() % 2);
      check("subdivision", subdivide_edge(g_, e, k), json{{"edge", edge_json(e)}, {"k", k}});
    }
    return out;
  }

  Outcome longest_cycle_contraction() {
    Outcome out;
    const int l = longest_cycle_length(g_);
    for (const EdgeRef& e : g_.edges()) {
      const int after = longest_cycle_length(contract_edge(g_, e).graph);
      out.record(after <= l, [&] { return json{{"edge", edge_json(e)}, {"l_G", l}, {"l_G_e", after}}; });
    }
    return out;
  }

  Outcome hadwiger_longest_cycle() {
    Outcome out;
    SearchBudget budget(config_.budget, "hadwiger number");
    const int h = hadwiger_number(g_, budget).t;
    const int l = longest_cycle_length(g_);
    out.record(h <= l, [&] { return json{{"h", h}, {"l", l}}; });
    out.detail["h"] = h;
    out.detail["l"] = l;
    return out;
  }

  const Graph& g_;
  const SuiteConfig& config_;
  std::optional<Cells> base_;
  std::optional<CharacteristicReport> report_;
};

std::vector<std::string> enabled(const SuiteConfig& config) {
  if (config.checks.empty()) return kCheckIds;
  for (const auto& id : config.checks) {
    if (!is_check_id(id)) throw std::invalid_argument("unknown check id: " + id);
  }
  std::vector<std::string> out;
  for (const auto& id : kCheckIds) {
    if (std::find(config.checks.begin(), config.checks.end(), id) != config.checks.end()) out.push_back(id);
  }
  return out;
}

}  // namespace

const std::vector<std::string>& all_check_ids() { return kCheckIds; }

bool is_check_id(const std::string& id) {
  return std::find(kCheckIds.begin(), kCheckIds.end(), id) != kCheckIds.end();
}

bool is_oracle_check(const std::string& id) {
  return std::find(kOracleChecks.begin(), kOracleChecks.end(), id) != kOracleChecks.end();
}

std::vector<CheckResult> run_checks(const Graph& g, const SuiteConfig& config) {
  const std::string graph6 = to_graph6(g);
  require_connected(g);
  GraphChecks checks(g, config);
  std::vector<CheckResult> out;
  for (const auto& id : enabled(config)) {
    CheckResult r{id, graph6, "pass", ""};
    try {
      Outcome o = checks.run(id);
      o.detail["cases"] = o.cases;
      if (o.failed) {
        r.status = "fail";
        o.detail["violations"] = o.violations;
      }
      r.detail = o.detail.dump();
    } catch (const BudgetExceeded& e) {
      r.status = "skipped-budget";
      r.detail = json{{"reason", e.what()}}.dump();
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<CheckResult> run_suite(const std::vector<Graph>& corpus, const SuiteConfig& config) {
  enabled(config);  // validate ids before spawning workers
  std::vector<std::vector<CheckResult>> slots(corpus.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= corpus.size()) return;
      try {
        slots[i] = run_checks(corpus[i], config);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  const unsigned jobs = std::max(1u, config.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  std::vector<CheckResult> out;
  for (auto& slot : slots) {
    for (auto& r : slot) out.push_back(std::move(r));
  }
  return out;
}

SuiteSummary summarize(const std::vector<CheckResult>& results) {
  SuiteSummary s;
  for (const auto& r : results) {
    if (r.status == "pass") {
      ++s.pass;
    } else if (r.status == "fail") {
      ++s.fail;
    } else {
      ++s.skipped;
    }
  }
  return s;
}

std::string summary_line(const SuiteSummary& s) {
  return "pass=" + std::to_string(s.pass) + " fail=" + std::to_string(s.fail) + " skipped=" + std::to_string(s.skipped);
}

nlohmann::ordered_json to_json(const CheckResult& r) {
  json detail = r.detail.empty() ? json::object() : json::parse(r.detail);
  return json{{"check", r.check}, {"graph", r.graph}, {"status", r.status}, {"detail", detail}};
}

}  // namespace beth
