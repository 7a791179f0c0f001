#pragma once

#include <algorithm>
#include <vector>

#include "widealloc/errors.hpp"

namespace widealloc {

// Calls fn(rows) once for every nonempty partition with total at most
// max_cells and (when max_distinct > 0) at most max_distinct distinct parts.
// `rows` is the descending row-length vector. Emission order is depth-first
// lexicographic: (1), (1,1), (1,1,1), ..., (2), (2,1), ... — deterministic,
// so reports built from it are reproducible.
template <typename Fn>
void for_each_partition(long long max_cells, int max_distinct, Fn&& fn) {
  detail::require(max_cells >= 0, "cell bound must be nonnegative");
  if (max_cells == 0) return;
  std::vector<long long> parts;
  long long total = 0;
  int distinct = 0;
  auto rec = [&](auto&& self) -> void {
    const long long last = parts.empty() ? max_cells : parts.back();
    const long long bound = std::min(last, max_cells - total);
    for (long long v = 1; v <= bound; ++v) {
      const bool new_distinct = parts.empty() || v != parts.back();
      if (max_distinct > 0 && new_distinct && distinct == max_distinct)
        continue;
      parts.push_back(v);
      total += v;
      if (new_distinct) ++distinct;
      fn(static_cast<const std::vector<long long>&>(parts));
      self(self);
      if (new_distinct) --distinct;
      total -= v;
      parts.pop_back();
    }
  };
  rec(rec);
}

// Calls fn(rows) once for every nonempty partition with at most max_rows
// parts, each at most max_len. Same depth-first lexicographic order.
template <typename Fn>
void for_each_bounded_partition(int max_rows, long long max_len, Fn&& fn) {
  detail::require(max_rows >= 0 && max_len >= 0, "bounds must be nonnegative");
  if (max_rows == 0 || max_len == 0) return;
  std::vector<long long> parts;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(parts.size()) == max_rows) return;
    const long long bound = parts.empty() ? max_len : parts.back();
    for (long long v = 1; v <= bound; ++v) {
      parts.push_back(v);
      fn(static_cast<const std::vector<long long>&>(parts));
      self(self);
      parts.pop_back();
    }
  };
  rec(rec);
}

}  // namespace widealloc
