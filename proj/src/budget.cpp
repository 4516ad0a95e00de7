#include "beth/budget.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace beth {

std::uint64_t default_budget() {
  const char* env = std::getenv("BETH_BUDGET");
  if (env == nullptr) return kDefaultBudget;
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), value);
  if (ec != std::errc{} || *ptr != '\0' || value == 0) return kDefaultBudget;
  return value;
}

}  // namespace beth
