#pragma once

#include <cstddef>
#include <vector>

#include "gsbmaps/arith.hpp"
#include "gsbmaps/error.hpp"

namespace gsb::detail {

// Refuse exhaustive searches beyond this many candidate tuples.
inline constexpr Int kMaxSearchSpace = Int{1} << 24;

inline Int search_space(std::size_t n, Int hi) {
  Int total = 1;
  for (std::size_t j = 0; j < n; ++j) {
    if (total > kMaxSearchSpace / hi) {
      throw PreconditionError("exhaustive search space exceeds " +
                              std::to_string(kMaxSearchSpace) + " tuples");
    }
    total *= hi;
  }
  return total;
}

/// Visits every tuple in [1, hi]^n in lexicographic order until visit
/// returns true. Returns whether the visit was cut short.
template <class Visit>
bool for_each_tuple(std::size_t n, Int hi, Visit&& visit) {
  search_space(n, hi);
  std::vector<Int> t(n, 1);
  while (true) {
    if (visit(static_cast<const std::vector<Int>&>(t))) return true;
    std::size_t j = n;
    while (j > 0 && t[j - 1] == hi) t[--j] = 1;
    if (j == 0) return false;
    ++t[j - 1];
  }
}

}  // namespace gsb::detail
