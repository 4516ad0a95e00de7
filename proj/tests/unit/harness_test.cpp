#include <gtest/gtest.h>

#include <sstream>

#include "beth/corpus.hpp"
#include "beth/errors.hpp"
#include "beth/graph_io.hpp"
#include "beth/suite.hpp"

using namespace beth;

TEST(Corpus, ExhaustiveCounts) {
  const std::vector<std::size_t> all = {1, 2, 4, 11, 34, 156, 1044};
  const std::vector<std::size_t> connected = {1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    EXPECT_EQ(all_graphs(n, false).size(), all[n - 1]) << n;
    EXPECT_EQ(all_graphs(n, true).size(), connected[n - 1]) << n;
  }
}

TEST(Corpus, CanonicalFormIsInvariant) {
  const Graph a = parse_graph6("D?{");
  Graph b(5);
  for (Vertex v = 1; v < 5; ++v) b.add_edge(0, v);
  EXPECT_EQ(canonical_code(a), canonical_code(b));
  EXPECT_NE(canonical_code(Graph::path(4)), canonical_code(Graph::complete_bipartite(1, 3)));
}

TEST(Generator, ParseAndEcho) {
  const GeneratorSpec s = GeneratorSpec::parse("n=5-9,p=0.4,count=3,seed=7");
  EXPECT_EQ(s.n_min, 5);
  EXPECT_EQ(s.n_max, 9);
  EXPECT_EQ(s.count, 3u);
  EXPECT_EQ(GeneratorSpec::parse(s.to_string()).to_string(), s.to_string());
  EXPECT_THROW(GeneratorSpec::parse("n=5,p=2,count=1"), std::invalid_argument);
  EXPECT_THROW(GeneratorSpec::parse("bogus"), std::invalid_argument);
}

TEST(Generator, DeterministicAndSized) {
  const GeneratorSpec s = GeneratorSpec::parse("n=9,p=0.4,count=30,seed=7");
  const auto a = generate(s);
  EXPECT_EQ(a.size(), 30u);
  EXPECT_EQ(a, generate(s));
  EXPECT_TRUE(generate(GeneratorSpec::parse("n=9,p=0.4,count=0,seed=7")).empty());
  for (const Graph& g : generate(GeneratorSpec::parse("n=6,p=1,count=4,seed=1"))) EXPECT_EQ(to_graph6(g), "E~~w");
  EXPECT_THROW(generate(GeneratorSpec::parse("n=6,p=1,count=4")), std::invalid_argument);
}

TEST(Corpus, WriteAndReadBack) {
  std::ostringstream out;
  write_corpus(out, {Graph::complete(3), Graph::path(4)}, "demo");
  EXPECT_EQ(out.str(), "# demo\nBw\nCh\n");
  std::istringstream in(out.str() + "\n");
  const auto entries = read_corpus(in);
  ASSERT_EQ(entries.size(), 2u);
  EXPECT_EQ(entries[1].graph, Graph::path(4));
  EXPECT_EQ(entries[1].line, 3u);

  std::ostringstream empty;
  write_corpus(empty, {}, "count=0");
  EXPECT_EQ(empty.str(), "# count=0\n");

  std::istringstream bad("Bw\n!!\n");
  try {
    read_corpus(bad);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(Suite, CheckIds) {
  EXPECT_TRUE(is_check_id("cone-S"));
  EXPECT_FALSE(is_check_id("cone-X"));
  EXPECT_TRUE(is_oracle_check("chi-bounds"));
  EXPECT_FALSE(is_oracle_check("census-identity"));
}

TEST(Suite, BudgetOfOneSkipsEveryOracleCheck) {
  SuiteConfig config;
  config.budget = 1;
  for (const Graph& g : connected_graphs_upto(5)) {
    for (const CheckResult& r : run_checks(g, config)) {
      if (is_oracle_check(r.check)) EXPECT_EQ(r.status, "skipped-budget") << r.check << ' ' << r.graph;
    }
  }
}

TEST(Suite, DeterministicAcrossJobCounts) {
  const auto corpus = generate(GeneratorSpec::parse("n=5-7,p=0.5,count=25,seed=3"));
  SuiteConfig one;
  one.seed = 9;
  SuiteConfig four = one;
  four.jobs = 4;
  const auto a = run_suite(corpus, one);
  const auto b = run_suite(corpus, four);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(to_json(a[i]).dump(), to_json(b[i]).dump());
}

TEST(Suite, FailuresCarryWitness) {
  SuiteConfig config;
  config.checks = {"nonedge-beth1-identity"};
  const auto results = run_checks(Graph::cycle(4), config);
  ASSERT_EQ(results.size(), 1u);
  EXPECT_EQ(results[0].status, "fail");
  EXPECT_NE(results[0].detail.find("witness"), std::string::npos);
  const SuiteSummary s = summarize(results);
  EXPECT_EQ(s.fail, 1u);
}
