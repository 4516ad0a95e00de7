#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace beth {

// Precondition violations on graph arguments (not an edge, out-of-range id, ...).
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Connected input required (the characteristics are only defined there).
class DisconnectedGraph : public GraphError {
 public:
  DisconnectedGraph() : GraphError("graph is not connected") {}
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// A search or enumeration hit its configured cap. Callers must treat the
// answer as unknown, never as negative.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace beth
