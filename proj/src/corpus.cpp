#include "beth/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <random>
#include <stdexcept>

#include "beth/errors.hpp"
#include "beth/graph_io.hpp"
#include "beth/operations.hpp"

namespace beth {

namespace {

// Stable colour refinement; colours are ranks of (colour, neighbour colours)
// signatures, so the final partition is isomorphism invariant.
std::vector<int> refine_colors(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(n, 0);
  int classes = n == 0 ? 0 : 1;
  while (true) {
    std::vector<std::pair<int, std::vector<int>>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      sig[v].first = color[v];
      for (Vertex u : members(g.neighbors(v))) sig[v].second.push_back(color[u]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    auto distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (Vertex v = 0; v < n; ++v) {
      color[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
    }
    if (static_cast<int>(distinct.size()) == classes) return color;
    classes = static_cast<int>(distinct.size());
  }
}

struct Canonizer {
  const Graph& g;
  std::vector<int> cell_of_position;
  std::vector<int> color;
  std::vector<Vertex> perm;
  std::vector<Vertex> best_perm;
  std::uint64_t best = ~std::uint64_t{0};
  VertexSet used = 0;

  explicit Canonizer(const Graph& graph) : g(graph) {
    color = refine_colors(g);
    cell_of_position = color;
    std::sort(cell_of_position.begin(), cell_of_position.end());
    perm.resize(g.order());
  }

  std::uint64_t code() const {
    std::uint64_t out = 0;
    int b = 0;
    for (int j = 1; j < g.order(); ++j) {
      for (int i = 0; i < j; ++i, ++b) {
        if (g.has_edge(perm[i], perm[j])) out |= std::uint64_t{1} << b;
      }
    }
    return out;
  }

  void rec(int pos) {
    if (pos == g.order()) {
      const std::uint64_t c = code();
      if (c < best) {
        best = c;
        best_perm = perm;
      }
      return;
    }
    for (Vertex v = 0; v < g.order(); ++v) {
      if ((used & bit(v)) || color[v] != cell_of_position[pos]) continue;
      perm[pos] = v;
      used |= bit(v);
      rec(pos + 1);
      used &= ~bit(v);
    }
  }
};

void check_order(const Graph& g) {
  // 11 vertices is the most an upper-triangle code fits into 64 bits.
  if (g.order() > 11) throw GraphError("canonical form supports at most 11 vertices");
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  check_order(g);
  Canonizer c(g);
  c.rec(0);
  return c.best;
}

Graph canonical_form(const Graph& g) {
  check_order(g);
  Canonizer c(g);
  c.rec(0);
  Graph out(g.order());
  for (int j = 1; j < g.order(); ++j) {
    for (int i = 0; i < j; ++i) {
      if (g.has_edge(c.best_perm[i], c.best_perm[j])) out.add_edge(i, j);
    }
  }
  return out;
}

namespace {

std::vector<Graph> sorted_by_graph6(std::vector<Graph> graphs) {
  std::vector<std::pair<std::string, Graph>> keyed;
  for (auto& g : graphs) keyed.emplace_back(to_graph6(g), std::move(g));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> out;
  for (auto& [key, g] : keyed) out.push_back(std::move(g));
  return out;
}

// All graphs on 1..max_n vertices by vertex addition and canonical dedup.
std::vector<std::vector<Graph>> all_levels(int max_n) {
  if (max_n < 1 || max_n > kExhaustiveMaxOrder) throw std::invalid_argument("exhaustive order out of range");
  std::vector<std::vector<Graph>> levels(max_n + 1);
  levels[1] = {Graph(1)};
  for (int k = 1; k < max_n; ++k) {
    std::map<std::uint64_t, Graph> seen;
    for (const Graph& g : levels[k]) {
      for (VertexSet s = 0; s <= full_set(k); ++s) {
        Graph h(k + 1);
        for (const auto& e : g.edges()) h.add_edge(e.u, e.v);
        for (Vertex v : members(s)) h.add_edge(v, k);
        const std::uint64_t code = canonical_code(h);
        if (!seen.count(code)) seen.emplace(code, canonical_form(h));
      }
    }
    for (auto& [code, g] : seen) levels[k + 1].push_back(std::move(g));
  }
  return levels;
}

}  // namespace

std::vector<Graph> all_graphs(int n, bool connected_only) {
  auto levels = all_levels(n);
  std::vector<Graph> out;
  for (Graph& g : levels[n]) {
    if (!connected_only || is_connected(g)) out.push_back(std::move(g));
  }
  return sorted_by_graph6(std::move(out));
}

std::vector<Graph> connected_graphs_upto(int max_n) {
  auto levels = all_levels(max_n);
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<Graph> level;
    for (Graph& g : levels[n]) {
      if (is_connected(g)) level.push_back(std::move(g));
    }
    for (Graph& g : sorted_by_graph6(std::move(level))) out.push_back(std::move(g));
  }
  return out;
}

namespace {

template <class T>
T parse_number(std::string_view text, const std::string& key) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("generator spec: bad value for " + key + ": '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

GeneratorSpec GeneratorSpec::parse(std::string_view text) {
  GeneratorSpec spec;
  bool have_n = false;
  bool have_p = false;
  bool have_count = false;
  while (!text.empty()) {
    const std::size_t comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view() : text.substr(comma + 1);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) throw std::invalid_argument("generator spec: expected key=value, got '" + std::string(item) + "'");
    const std::string key(item.substr(0, eq));
    const std::string_view value = item.substr(eq + 1);
    if (key == "n") {
      const std::size_t dash = value.find('-');
      spec.n_min = parse_number<int>(value.substr(0, dash), key);
      spec.n_max = dash == std::string_view::npos ? spec.n_min : parse_number<int>(value.substr(dash + 1), key);
      have_n = true;
    } else if (key == "p") {
      spec.p = parse_number<double>(value, key);
      have_p = true;
    } else if (key == "count") {
      spec.count = parse_number<std::size_t>(value, key);
      have_count = true;
    } else if (key == "seed") {
      spec.seed = parse_number<std::uint64_t>(value, key);
    } else {
      throw std::invalid_argument("generator spec: unknown key '" + key + "'");
    }
  }
  if (!have_n || !have_p || !have_count) throw std::invalid_argument("generator spec needs n, p and count");
  if (spec.n_min < 1 || spec.n_max < spec.n_min || spec.n_max > 62) {
    throw std::invalid_argument("generator spec: n must satisfy 1 <= n <= 62");
  }
  if (!(spec.p >= 0.0 && spec.p <= 1.0)) throw std::invalid_argument("generator spec: p must lie in [0, 1]");
  return spec;
}

std::string GeneratorSpec::to_string() const {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, p);
  std::string out = "n=" + std::to_string(n_min);
  if (n_max != n_min) out += "-" + std::to_string(n_max);
  out += ",p=" + std::string(buf, res.ptr) + ",count=" + std::to_string(count);
  if (seed) out += ",seed=" + std::to_string(*seed);
  return out;
}

std::vector<Graph> generate(const GeneratorSpec& spec) {
  if (!spec.seed) throw std::invalid_argument("generator runs need a seed");
  std::mt19937_64 master(*spec.seed);
  const auto width = static_cast<std::uint64_t>(spec.n_max - spec.n_min + 1);
  std::vector<Graph> out;
  out.reserve(spec.count);
  for (std::size_t i = 0; i < spec.count; ++i) {
    const int n = spec.n_min + static_cast<int>(master() % width);
    const std::uint64_t seed = master();
    out.push_back(random_connected_graph(n, spec.p, seed));
  }
  return out;
}

std::vector<CorpusEntry> read_corpus(std::istream& in) {
  std::vector<CorpusEntry> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
    const std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') continue;
    line.erase(0, start);
    try {
      out.push_back({parse_graph6(line), line, number});
    } catch (const ParseError& e) {
      std::string msg = e.what();
      msg = msg.substr(0, msg.rfind(" (at byte"));
      throw ParseError("line " + std::to_string(number) + ": " + msg, e.offset());
    }
  }
  return out;
}

std::vector<CorpusEntry> read_corpus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read corpus file " + path);
  return read_corpus(in);
}

void write_corpus(std::ostream& out, const std::vector<Graph>& graphs, const std::string& header) {
  if (!header.empty()) out << "# " << header << '\n';
  for (const Graph& g : graphs) out << to_graph6(g) << '\n';
}

}  // namespace beth
