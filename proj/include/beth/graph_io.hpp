#pragma once

#include <string>
#include <string_view>

#include "beth/graph.hpp"

namespace beth {

// Short-form graph6 (n <= 62). An optional ">>graph6<<" prefix and a trailing
// newline are accepted; anything else malformed raises ParseError with the
// offending byte offset.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// One "u v" pair per line; an optional first line "n <count>" fixes the
// vertex count. Blank lines and lines starting with '#' are skipped.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

}  // namespace beth
