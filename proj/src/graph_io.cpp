#include "beth/graph_io.hpp"

#include <charconv>
#include <set>
#include <sstream>
#include <vector>

#include "beth/errors.hpp"

namespace beth {

namespace {

constexpr int kGraph6MaxOrder = 62;
constexpr std::string_view kGraph6Header = ">>graph6<<";

std::size_t graph6_body_bytes(int n) {
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  return (bits + 5) / 6;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.starts_with(kGraph6Header)) {
    text.remove_prefix(kGraph6Header.size());
    base = kGraph6Header.size();
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("graph6: empty input", base);

  const int head = static_cast<unsigned char>(text[0]);
  if (head == 126) throw ParseError("graph6: graphs with more than 62 vertices are not supported", base);
  if (head < 63 || head > 126) throw ParseError("graph6: invalid order byte", base);
  const int n = head - 63;

  const std::size_t expected = graph6_body_bytes(n);
  const std::string_view body = text.substr(1);
  for (std::size_t i = 0; i < body.size(); ++i) {
    const int c = static_cast<unsigned char>(body[i]);
    if (c < 63 || c > 126) throw ParseError("graph6: byte out of range", base + 1 + i);
  }
  if (body.size() < expected) throw ParseError("graph6: truncated adjacency bits", base + 1 + body.size());
  if (body.size() > expected) throw ParseError("graph6: trailing bytes after adjacency bits", base + 1 + expected);

  Graph g(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int six = static_cast<unsigned char>(body[k / 6]) - 63;
      if ((six >> (5 - static_cast<int>(k % 6))) & 1) g.add_edge(i, j);
    }
  }
  // Padding bits in the last byte must be zero.
  if (k % 6 != 0) {
    const int six = static_cast<unsigned char>(body[k / 6]) - 63;
    if ((six & ((1 << (6 - k % 6)) - 1)) != 0) {
      throw ParseError("graph6: nonzero padding bits", base + 1 + k / 6);
    }
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder) throw GraphError("graph6 short form supports at most 62 vertices");
  std::string out(1, static_cast<char>(63 + n));
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

namespace {

struct Token {
  std::string_view text;
  std::size_t offset;
};

int parse_int(const Token& tok) {
  int value = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || value < 0) {
    throw ParseError("edge list: expected a nonnegative integer, got '" + std::string(tok.text) + "'", tok.offset);
  }
  return value;
}

std::vector<Token> split(std::string_view line, std::size_t offset) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back({line.substr(start, i - start), offset + start});
  }
  return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  int declared = -1;
  std::set<EdgeRef> edges;
  int max_id = -1;
  bool first_content = true;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    const auto tokens = split(line, pos);
    const bool skip = tokens.empty() || tokens[0].text.starts_with('#');
    if (!skip) {
      if (tokens.size() != 2) throw ParseError("edge list: expected two tokens per line", pos);
      if (first_content && tokens[0].text == "n") {
        declared = parse_int(tokens[1]);
        if (declared > kMaxVertices) throw ParseError("edge list: vertex count exceeds 64", tokens[1].offset);
      } else {
        const int a = parse_int(tokens[0]);
        const int b = parse_int(tokens[1]);
        if (a == b) throw ParseError("edge list: self-loop", tokens[0].offset);
        if (a >= kMaxVertices || b >= kMaxVertices) {
          throw ParseError("edge list: vertex id exceeds 63", tokens[0].offset);
        }
        if (declared >= 0 && (a >= declared || b >= declared)) {
          throw ParseError("edge list: vertex id exceeds declared count", tokens[0].offset);
        }
        edges.insert(EdgeRef::of(a, b));
        max_id = std::max({max_id, a, b});
      }
      first_content = false;
    }
    pos = end + 1;
  }

  const int n = declared >= 0 ? declared : max_id + 1;
  return Graph::from_edges(n, {edges.begin(), edges.end()});
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.order() << '\n';
  for (const EdgeRef& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace beth
