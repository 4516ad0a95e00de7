// beth: graph characteristics report, property suite and corpus generator.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "beth/corpus.hpp"
#include "beth/errors.hpp"
#include "beth/graph_io.hpp"
#include "beth/report.hpp"
#include "beth/suite.hpp"

namespace {

using beth::Graph;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;

std::string slurp(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  return slurp(in);
}

// Writes to --out when given, else stdout.
void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << text;
}

struct ReportArgs {
  std::string graph6;
  std::string edge_list;
  std::string stdin_format = "graph6";
  bool oracles = true;
  std::uint64_t budget = 0;
  std::string format = "json";
  std::string out;
};

int run_report(const ReportArgs& a) {
  Graph g;
  if (!a.graph6.empty()) {
    g = beth::parse_graph6(a.graph6);
  } else if (!a.edge_list.empty()) {
    g = beth::parse_edge_list(read_file(a.edge_list));
  } else {
    const std::string text = slurp(std::cin);
    g = a.stdin_format == "edge-list" ? beth::parse_edge_list(text) : beth::parse_graph6(text);
  }
  beth::ReportOptions options;
  options.oracles = a.oracles;
  options.budget = a.budget;
  const beth::CharacteristicReport report = beth::make_report(g, options);
  const json j = beth::to_json(report);
  if (a.format == "csv") {
    emit(beth::csv_header(j) + "\n" + beth::csv_row(j) + "\n", a.out);
  } else {
    emit(j.dump(2) + "\n", a.out);
  }
  for (const auto& name : report.budget_exceeded) std::cerr << "beth: " << name << " oracle exceeded its budget\n";
  return report.budget_exceeded.empty() ? kExitOk : kExitBudget;
}

struct SuiteArgs {
  std::string corpus;
  std::string generator;
  int connected_upto = 0;
  std::vector<std::string> checks;
  std::uint64_t budget = 0;
  std::optional<std::uint64_t> seed;
  std::size_t realizations = 4;
  unsigned jobs = 1;
  std::string format = "json";
  std::string out;
};

int run_suite(const SuiteArgs& a) {
  std::vector<Graph> graphs;
  json source;
  std::uint64_t seed = a.seed.value_or(0);
  if (!a.corpus.empty()) {
    for (auto& e : beth::read_corpus_file(a.corpus)) graphs.push_back(std::move(e.graph));
    source = {{"corpus", a.corpus}};
  } else if (!a.generator.empty()) {
    auto spec = beth::GeneratorSpec::parse(a.generator);
    if (a.seed) spec.seed = a.seed;
    if (!spec.seed) throw std::invalid_argument("generator runs need a seed (in the spec or via --seed)");
    seed = *spec.seed;
    graphs = beth::generate(spec);
    source = {{"generator", spec.to_string()}};
  } else {
    graphs = beth::connected_graphs_upto(a.connected_upto);
    source = {{"connected_upto", a.connected_upto}};
  }

  beth::SuiteConfig config;
  config.checks = a.checks;
  config.budget = a.budget;
  config.seed = seed;
  config.realizations = a.realizations;
  config.jobs = a.jobs;
  const auto results = beth::run_suite(graphs, config);
  const auto summary = beth::summarize(results);

  if (a.format == "csv") {
    std::string text = "check,graph,status,detail\n";
    for (const auto& r : results) {
      text += beth::csv_escape(r.check) + "," + beth::csv_escape(r.graph) + "," + r.status + "," +
              beth::csv_escape(r.detail) + "\n";
    }
    emit(text, a.out);
  } else {
    json j;
    json checks = json::array();
    for (const auto& id : a.checks.empty() ? beth::all_check_ids() : a.checks) checks.push_back(id);
    j["config"] = {{"source", source}, {"checks", checks}, {"budget", a.budget}, {"seed", seed},
                   {"realizations", a.realizations}};
    j["results"] = json::array();
    for (const auto& r : results) j["results"].push_back(beth::to_json(r));
    j["summary"] = {{"pass", summary.pass}, {"fail", summary.fail}, {"skipped", summary.skipped}};
    emit(j.dump(2) + "\n", a.out);
  }
  for (const auto& r : results) {
    if (r.status == "fail") std::cerr << "FAIL " << r.check << " " << r.graph << " " << r.detail << "\n";
  }
  std::cerr << beth::summary_line(summary) << "\n";
  return summary.fail == 0 ? kExitOk : kExitFail;
}

struct GenArgs {
  std::string generator;
  std::optional<std::uint64_t> seed;
  int connected_upto = 0;
  std::string out;
};

int run_gen(const GenArgs& a) {
  std::ostringstream text;
  if (a.connected_upto > 0) {
    beth::write_corpus(text, beth::connected_graphs_upto(a.connected_upto),
                       "beth gen connected-upto=" + std::to_string(a.connected_upto));
  } else {
    auto spec = beth::GeneratorSpec::parse(a.generator);
    if (a.seed) spec.seed = a.seed;
    if (!spec.seed) throw std::invalid_argument("generator runs need a seed (in the spec or via --seed)");
    beth::write_corpus(text, beth::generate(spec), "beth gen " + spec.to_string());
  }
  emit(text.str(), a.out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph characteristics: induced cycles, solids and bounds on chromatic and Hadwiger numbers"};
  app.require_subcommand(1);
  const std::uint64_t budget = beth::default_budget();

  ReportArgs ra;
  ra.budget = budget;
  auto* report = app.add_subcommand("report", "Characteristic report for one graph");
  auto* g6 = report->add_option("--graph6", ra.graph6, "Graph in graph6");
  auto* el = report->add_option("--edge-list", ra.edge_list, "Edge-list file");
  g6->excludes(el);
  report->add_option("--stdin-format", ra.stdin_format, "Format of standard input")
      ->check(CLI::IsMember({"graph6", "edge-list"}));
  report->add_flag("--oracles,!--no-oracles", ra.oracles, "Compute exact chi, h and planarity (default on)");
  report->add_option("--budget", ra.budget, "Node budget per oracle call (BETH_BUDGET)");
  report->add_option("--format", ra.format)->check(CLI::IsMember({"json", "csv"}));
  report->add_option("--out", ra.out, "Output path (default stdout)");

  SuiteArgs sa;
  sa.budget = budget;
  auto* suite = app.add_subcommand("suite", "Run property checks over a corpus");
  auto* corpus = suite->add_option("--corpus", sa.corpus, "graph6 corpus file");
  auto* gen = suite->add_option("--generator", sa.generator, "Generator spec, e.g. n=9,p=0.4,count=300,seed=7");
  auto* upto = suite->add_option("--connected-upto", sa.connected_upto, "All connected graphs up to this order")
                   ->check(CLI::Range(1, beth::kExhaustiveMaxOrder));
  corpus->excludes(gen)->excludes(upto);
  gen->excludes(upto);
  suite->add_option("--checks", sa.checks, "Comma-separated check ids")->delimiter(',');
  suite->add_option("--budget", sa.budget, "Node budget per oracle call");
  suite->add_option("--seed", sa.seed, "Seed for generation and randomized constructions");
  suite->add_option("--realizations", sa.realizations, "Optimal colourings tried per vertex compression");
  suite->add_option("--jobs", sa.jobs, "Worker threads");
  suite->add_option("--format", sa.format)->check(CLI::IsMember({"json", "csv"}));
  suite->add_option("--out", sa.out, "Output path (default stdout)");

  GenArgs ga;
  auto* gencmd = app.add_subcommand("gen", "Write a graph6 corpus");
  auto* gspec = gencmd->add_option("--generator,spec", ga.generator, "Generator spec n=..,p=..,count=..[,seed=..]");
  auto* gupto = gencmd->add_option("--connected-upto", ga.connected_upto, "All connected graphs up to this order")
                    ->check(CLI::Range(1, beth::kExhaustiveMaxOrder));
  gspec->excludes(gupto);
  gencmd->add_option("--seed", ga.seed, "Seed (overrides the spec)");
  gencmd->add_option("--out", ga.out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitParse;
  }

  try {
    if (*report) return run_report(ra);
    if (*suite) {
      if (sa.corpus.empty() && sa.generator.empty() && sa.connected_upto == 0) {
        throw std::invalid_argument("suite needs --corpus, --generator or --connected-upto");
      }
      return run_suite(sa);
    }
    if (ga.generator.empty() && ga.connected_upto == 0) throw std::invalid_argument("gen needs a spec or --connected-upto");
    return run_gen(ga);
  } catch (const beth::ParseError& e) {
    std::cerr << "beth: parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const beth::BudgetExceeded& e) {
    std::cerr << "beth: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "beth: " << e.what() << "\n";
    return kExitFail;
  }
}
