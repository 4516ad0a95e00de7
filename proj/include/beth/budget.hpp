#pragma once

#include <cstdint>
#include <string>

#include "beth/errors.hpp"

namespace beth {

inline constexpr std::uint64_t kDefaultBudget = 200'000'000;

// Node-count cap shared by one search. Every oracle entry point charges two
// nodes up front (root and verdict), so a budget of 1 never yields an answer.
class SearchBudget {
 public:
  explicit SearchBudget(std::uint64_t max_nodes = kDefaultBudget, std::string what = "search")
      : max_nodes_(max_nodes), what_(std::move(what)) {}

  void charge(std::uint64_t nodes = 1) {
    used_ += nodes;
    if (used_ > max_nodes_) {
      throw BudgetExceeded(what_ + ": node budget of " + std::to_string(max_nodes_) + " exceeded");
    }
  }

  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return max_nodes_; }

 private:
  std::uint64_t max_nodes_;
  std::uint64_t used_ = 0;
  std::string what_;
};

// kDefaultBudget unless BETH_BUDGET holds a positive integer.
std::uint64_t default_budget();

}  // namespace beth
