#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "beth/graph.hpp"

namespace beth {

// Least upper-triangle code over relabellings that sort vertices by degree.
// Equal codes <=> isomorphic graphs.
std::uint64_t canonical_code(const Graph& g);
Graph canonical_form(const Graph& g);

inline constexpr int kExhaustiveMaxOrder = 8;

// Every graph on n vertices up to isomorphism, canonically labelled, sorted
// by graph6. connected_only drops the disconnected ones.
std::vector<Graph> all_graphs(int n, bool connected_only);
// Connected graphs with 1..max_n vertices, in order of n.
std::vector<Graph> connected_graphs_upto(int max_n);

// "n=9,p=0.4,count=300,seed=7"; n may be a range "5-9"; seed is optional here
// and required before generation.
struct GeneratorSpec {
  int n_min = 1;
  int n_max = 1;
  double p = 0.5;
  std::size_t count = 0;
  std::optional<std::uint64_t> seed;

  static GeneratorSpec parse(std::string_view text);
  std::string to_string() const;
};

// Deterministic in the spec: sample i uses its own seed drawn from the spec seed.
std::vector<Graph> generate(const GeneratorSpec& spec);

struct CorpusEntry {
  Graph graph;
  std::string graph6;
  std::size_t line = 0;
};

// One graph6 per line; blank lines and '#' lines are skipped. ParseError
// messages name the line.
std::vector<CorpusEntry> read_corpus(std::istream& in);
std::vector<CorpusEntry> read_corpus_file(const std::string& path);
void write_corpus(std::ostream& out, const std::vector<Graph>& graphs, const std::string& header);

}  // namespace beth
