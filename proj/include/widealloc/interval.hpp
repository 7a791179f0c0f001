#pragma once

#include <algorithm>
#include <cstdint>
#include <string>

namespace widealloc {

// Closed integer interval [lo, hi]; empty when lo > hi.
struct IntInterval {
  long long lo = 0;
  long long hi = -1;

  static IntInterval closed(long long lo, long long hi) { return {lo, hi}; }
  static IntInterval point(long long v) { return {v, v}; }
  static IntInterval empty_interval() { return {0, -1}; }

  bool empty() const { return lo > hi; }
  bool contains(long long v) const { return lo <= v && v <= hi; }
  // Number of integers in the interval (0 when empty).
  long long size() const { return empty() ? 0 : hi - lo + 1; }

  long long clamp(long long v) const { return std::min(std::max(v, lo), hi); }

  IntInterval intersect(const IntInterval& o) const {
    return {std::max(lo, o.lo), std::min(hi, o.hi)};
  }

  // Minkowski sum: {x + y : x here, y there}. Empty if either side is empty.
  IntInterval operator+(const IntInterval& o) const {
    if (empty() || o.empty()) return empty_interval();
    return {lo + o.lo, hi + o.hi};
  }

  bool operator==(const IntInterval& o) const = default;

  std::string to_string() const {
    if (empty()) return "[]";
    return "[" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
  }
};

}  // namespace widealloc
