#include <gtest/gtest.h>

#include <stdexcept>

#include "beth/characteristics.hpp"
#include "beth/errors.hpp"
#include "beth/report.hpp"
#include "beth/graph_io.hpp"
#include "oracles.hpp"

using namespace beth;

TEST(Characteristics, CompleteGraphConstants) {
  const std::vector<std::int64_t> b2 = {1, 1, 1, 2, 5, 11, 21, 36, 57};
  const std::vector<std::int64_t> b3 = {-1, -1, -1, -1, 0, 4, 14, 34, 69};
  for (int r = 1; r <= 9; ++r) {
    EXPECT_EQ(beth_complete(2, r), b2[r - 1]) << r;
    EXPECT_EQ(beth_complete(3, r), b3[r - 1]) << r;
    EXPECT_EQ(beth2(Graph::complete(r)), b2[r - 1]) << r;
    EXPECT_EQ(beth3(Graph::complete(r)), b3[r - 1]) << r;
    EXPECT_EQ(beth1(Graph::complete(r)), beth_complete(1, r));
  }
  EXPECT_THROW(beth_complete(4, 3), std::invalid_argument);
  EXPECT_THROW(beth_complete(2, -1), std::invalid_argument);
}

TEST(Characteristics, StrictlyIncreasingTails) {
  for (int r = 2; r < 40; ++r) EXPECT_LT(beth_complete(1, r), beth_complete(1, r + 1));
  for (int r = 3; r < 40; ++r) EXPECT_LT(beth_complete(2, r), beth_complete(2, r + 1));
  for (int r = 4; r < 40; ++r) EXPECT_LT(beth_complete(3, r), beth_complete(3, r + 1));
}

TEST(Characteristics, MaxCompleteOrder) {
  EXPECT_EQ(max_complete_order_within(2, 35), 7);
  EXPECT_EQ(max_complete_order_within(2, 36), 8);
  EXPECT_EQ(max_complete_order_within(3, 68), 8);
  EXPECT_EQ(max_complete_order_within(3, 69), 9);
  EXPECT_EQ(max_complete_order_within(3, -1), 4);
  EXPECT_EQ(max_complete_order_within(1, -1), 2);
  EXPECT_EQ(max_complete_order_within(1, 0), 3);
}

TEST(Characteristics, FirstBoundClosedFormAgrees) {
  for (std::int64_t b = -1; b < 5000; ++b) {
    EXPECT_EQ(first_upper_bound_from(b), first_upper_bound_closed_form(b)) << b;
  }
  EXPECT_EQ(first_upper_bound(Graph::complete(5)), 5);
  EXPECT_EQ(first_upper_bound(Graph::path(6)), 2);
}

TEST(Characteristics, DisconnectedInputRejected) {
  EXPECT_THROW(beth1(Graph(2)), DisconnectedGraph);
  EXPECT_THROW(beth2(Graph(0)), DisconnectedGraph);
  EXPECT_THROW(first_upper_bound(Graph(3)), DisconnectedGraph);
}

TEST(Report, CompleteSixIsTight) {
  const CharacteristicReport r = make_report(Graph::complete(6));
  EXPECT_EQ(r.bound1, 6);
  EXPECT_EQ(r.bound2, 6);
  EXPECT_EQ(r.bound3, 6);
  ASSERT_TRUE(r.chi.has_value());
  ASSERT_TRUE(r.hadwiger.has_value());
  EXPECT_EQ(*r.chi, 6);
  EXPECT_EQ(*r.hadwiger, 6);
  EXPECT_FALSE(r.any_failed());
}

TEST(Report, Octahedron) {
  const CharacteristicReport r = make_report(ref::octahedron());
  EXPECT_EQ(r.c, 11);
  EXPECT_EQ(r.s, 6);
  ASSERT_TRUE(r.planar.has_value());
  EXPECT_TRUE(*r.planar);
  ASSERT_TRUE(r.faces.has_value());
  EXPECT_EQ(*r.faces, 8);
  EXPECT_EQ(r.s - r.c + *r.faces, 3);
  EXPECT_FALSE(r.any_failed());
}

TEST(Report, TreeAndNoOracles) {
  const CharacteristicReport tree = make_report(Graph::path(5), {.oracles = false});
  EXPECT_EQ(tree.beth1, -1);
  EXPECT_EQ(tree.bound1, 2);
  EXPECT_FALSE(tree.chi.has_value());
  const CharacteristicReport k8 = make_report(Graph::complete(8), {.oracles = false});
  EXPECT_EQ(k8.beth3, 34);
}

TEST(Report, TinyBudgetSkipsOracles) {
  const CharacteristicReport r = make_report(ref::petersen(), {.oracles = true, .budget = 1});
  EXPECT_EQ(r.budget_exceeded, (std::vector<std::string>{"chi", "hadwiger", "planar"}));
  const Check* c = r.find_check("chi_bounds");
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->status, CheckStatus::skipped);
}

TEST(Report, JsonIsDeterministicAndMatchesCsv) {
  const Graph g = parse_graph6("FhCKG");
  const std::string a = to_json(make_report(g)).dump();
  const std::string b = to_json(make_report(parse_graph6("FhCKG"))).dump();
  EXPECT_EQ(a, b);

  const auto json = to_json(make_report(g));
  const std::string header = csv_header(json);
  const std::string row = csv_row(json);
  std::size_t columns = 1;
  for (char ch : header) columns += ch == ',';
  EXPECT_EQ(columns, json.size());
  EXPECT_NE(row.find(json["graph6"].get<std::string>()), std::string::npos);
  EXPECT_EQ(csv_escape("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_escape("q\""), "\"q\"\"\"");
}
