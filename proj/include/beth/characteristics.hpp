#pragma once

#include <cstdint>

#include "beth/graph.hpp"

namespace beth {

std::int64_t binomial(std::int64_t n, std::int64_t k);

// All three throw DisconnectedGraph unless g is connected with n >= 1.
std::int64_t beth1(const Graph& g);
std::int64_t beth2(const Graph& g);
std::int64_t beth3(const Graph& g);

// Alternating sums from precomputed counts.
inline std::int64_t beth1_from(std::int64_t n, std::int64_t m) { return m - n; }
inline std::int64_t beth2_from(std::int64_t n, std::int64_t m, std::int64_t c) { return c - m + n; }
inline std::int64_t beth3_from(std::int64_t n, std::int64_t m, std::int64_t c, std::int64_t s) {
  return s - c + m - n;
}

// beth_i(K^r) in closed form, i in {1, 2, 3}, r >= 1.
std::int64_t beth_complete(int i, std::int64_t r);

// Largest r with beth_complete(i, r) <= value, by linear scan. Plateaus at
// small r resolve to their largest member. Throws std::invalid_argument when
// value < beth_complete(i, 1).
int max_complete_order_within(int i, std::int64_t value);

// floor((3 + sqrt(9 + 8 beth1)) / 2), computed by the scan; throws on disconnected input.
int first_upper_bound(const Graph& g);
int first_upper_bound_from(std::int64_t beth1_value);
// The floating-point closed form, kept as a cross-check.
int first_upper_bound_closed_form(std::int64_t beth1_value);

void require_connected(const Graph& g);

}  // namespace beth
