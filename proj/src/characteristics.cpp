#include "beth/characteristics.hpp"

#include <cmath>
#include <algorithm>
#include <stdexcept>

#include "beth/cycles.hpp"
#include "beth/errors.hpp"
#include "beth/operations.hpp"
#include "beth/solids.hpp"

namespace beth {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t out = 1;
  for (std::int64_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

void require_connected(const Graph& g) {
  if (g.order() == 0 || !is_connected(g)) throw DisconnectedGraph();
}

std::int64_t beth1(const Graph& g) {
  require_connected(g);
  return beth1_from(g.order(), g.size());
}

std::int64_t beth2(const Graph& g) {
  require_connected(g);
  return beth2_from(g.order(), g.size(), static_cast<std::int64_t>(count_induced_cycles(g)));
}

std::int64_t beth3(const Graph& g) {
  require_connected(g);
  const auto cycles = enumerate_induced_cycles(g);
  const auto solids = enumerate_solids(g, cycles);
  return beth3_from(g.order(), g.size(), static_cast<std::int64_t>(cycles.size()),
                    static_cast<std::int64_t>(solids.size()));
}

std::int64_t beth_complete(int i, std::int64_t r) {
  if (r < 1) throw std::invalid_argument("complete graph order must be positive");
  switch (i) {
    case 1:
      return binomial(r, 2) - r;
    case 2:
      return binomial(r, 3) - binomial(r, 2) + r;
    case 3:
      return binomial(r, 4) - binomial(r, 3) + binomial(r, 2) - r;
    default:
      throw std::invalid_argument("characteristic index must be 1, 2 or 3");
  }
}

int max_complete_order_within(int i, std::int64_t value) {
  if (value < beth_complete(i, 1)) throw std::invalid_argument("value below beth_complete(i, 1)");
  int r = 1;
  // Past the plateau each closed form is strictly increasing and unbounded.
  while (beth_complete(i, r + 1) <= value) ++r;
  return r;
}

int first_upper_bound_from(std::int64_t beth1_value) { return max_complete_order_within(1, beth1_value); }

int first_upper_bound_closed_form(std::int64_t beth1_value) {
  const double radicand = 9.0 + 8.0 * static_cast<double>(beth1_value);
  return static_cast<int>(std::floor((3.0 + std::sqrt(radicand)) / 2.0));
}

int first_upper_bound(const Graph& g) { return first_upper_bound_from(beth1(g)); }

}  // namespace beth
