#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "widealloc/diagram.hpp"
#include "widealloc/errors.hpp"

namespace widealloc {

// Scale gate for the exact backtracking filler (symbol sets live in uint64
// bitmasks, and the search is exponential past desk scale anyway).
inline constexpr long long kExactFillMaxCells = 64;

// A per-cell symbol assignment for a Young diagram. Rows are stored
// top-to-bottom (longest first); rows[r] has exactly the r-th row's length.
struct LatinFilling {
  YoungDiagram diagram;
  std::vector<std::vector<int>> rows;
};

struct FillingViolation {
  enum class Kind {
    kRowContent,    // row lacks some symbol of 1..len or repeats one
    kColumnRepeat,  // two cells of one column share a symbol
  };

  Kind kind = Kind::kRowContent;
  long long row = 0;     // 1-based row (kRowContent) or first offending row
  long long column = 0;  // 1-based column (kColumnRepeat)
  long long symbol = 0;

  std::string describe() const {
    switch (kind) {
      case Kind::kRowContent:
        return "row " + std::to_string(row) + " does not contain symbol " +
               std::to_string(symbol) + " exactly once";
      case Kind::kColumnRepeat:
        return "column " + std::to_string(column) + " repeats symbol " +
               std::to_string(symbol) + " (second time in row " +
               std::to_string(row) + ")";
    }
    return "invalid violation";
  }
};

struct FillingVerdict {
  bool ok = true;
  std::optional<FillingViolation> violation;
};

// Checks that every row of length l holds exactly the symbols 1..l and that
// no column repeats a symbol. The filling's shape must match the diagram
// (that is an input error, not a verdict).
inline FillingVerdict verify_filling(const YoungDiagram& y,
                                     const LatinFilling& f) {
  const std::vector<long long> lens = y.row_lengths();
  detail::require(f.rows.size() == lens.size(),
                  "filling has " + std::to_string(f.rows.size()) +
                      " rows, diagram has " + std::to_string(lens.size()));
  for (std::size_t r = 0; r < lens.size(); ++r)
    detail::require(
        f.rows[r].size() == static_cast<std::size_t>(lens[r]),
        "filling row " + std::to_string(r + 1) + " has length " +
            std::to_string(f.rows[r].size()) + ", diagram row has " +
            std::to_string(lens[r]));

  using Kind = FillingViolation::Kind;
  std::vector<long long> stamp(static_cast<std::size_t>(y.widest()) + 1, -1);
  for (std::size_t r = 0; r < f.rows.size(); ++r) {
    for (const int s : f.rows[r]) {
      if (s < 1 || s > static_cast<int>(f.rows[r].size()) ||
          stamp[static_cast<std::size_t>(s)] == static_cast<long long>(r))
        return {false, FillingViolation{Kind::kRowContent,
                                        static_cast<long long>(r + 1), 0, s}};
      stamp[static_cast<std::size_t>(s)] = static_cast<long long>(r);
    }
    // Exactly len distinct in-range symbols means the set is {1..len}.
  }
  std::fill(stamp.begin(), stamp.end(), -1);
  for (long long c = 0; c < y.widest(); ++c) {
    for (std::size_t r = 0;
         r < f.rows.size() && static_cast<long long>(f.rows[r].size()) > c;
         ++r) {
      const int s = f.rows[r][static_cast<std::size_t>(c)];
      if (stamp[static_cast<std::size_t>(s)] == c)
        return {false, FillingViolation{Kind::kColumnRepeat,
                                        static_cast<long long>(r + 1), c + 1,
                                        s}};
      stamp[static_cast<std::size_t>(s)] = c;
    }
  }
  return {};
}

struct ExactFillResult {
  std::optional<LatinFilling> filling;  // present iff a filling exists
  long long nodes = 0;                  // search-tree nodes expanded

  bool found() const { return filling.has_value(); }
};

// Complete backtracking filler: most-constrained cell first (fewest symbol
// candidates, then topmost row, then leftmost column), candidates tried in
// ascending symbol order. Exhaustive within its scale gate, so an empty
// result is a proof of infeasibility.
inline ExactFillResult fill_exact(const YoungDiagram& y) {
  if (y.cells() > kExactFillMaxCells)
    throw ScaleLimitError("exact filler is gated to " +
                          std::to_string(kExactFillMaxCells) +
                          " cells, got " + std::to_string(y.cells()));

  const std::vector<long long> lens = y.row_lengths();
  const int rows = static_cast<int>(lens.size());
  const int cols = static_cast<int>(y.widest());
  std::vector<std::vector<int>> grid(static_cast<std::size_t>(rows));
  for (int r = 0; r < rows; ++r)
    grid[static_cast<std::size_t>(r)].assign(
        static_cast<std::size_t>(lens[static_cast<std::size_t>(r)]), 0);

  std::vector<std::uint64_t> row_used(static_cast<std::size_t>(rows), 0);
  std::vector<std::uint64_t> col_used(static_cast<std::size_t>(cols), 0);
  auto full_mask = [](long long width) -> std::uint64_t {
    return width >= 64 ? ~0ULL : ((1ULL << width) - 1);
  };

  ExactFillResult result;
  long long remaining = y.cells();

  auto solve = [&](auto&& self) -> bool {
    if (remaining == 0) return true;
    ++result.nodes;
    // Most-constrained open cell.
    int best_r = -1, best_c = -1, best_count = 65;
    std::uint64_t best_cand = 0;
    for (int r = 0; r < rows && best_count > 1; ++r) {
      const std::uint64_t allowed =
          full_mask(lens[static_cast<std::size_t>(r)]) &
          ~row_used[static_cast<std::size_t>(r)];
      for (int c = 0; c < static_cast<int>(lens[static_cast<std::size_t>(r)]);
           ++c) {
        if (grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)])
          continue;
        const std::uint64_t cand =
            allowed & ~col_used[static_cast<std::size_t>(c)];
        const int count = __builtin_popcountll(cand);
        if (count == 0) return false;  // dead end
        if (count < best_count) {
          best_count = count;
          best_r = r;
          best_c = c;
          best_cand = cand;
          if (count == 1) break;
        }
      }
    }
    for (std::uint64_t cand = best_cand; cand; cand &= cand - 1) {
      const int bit = __builtin_ctzll(cand);
      const std::uint64_t m = 1ULL << bit;
      grid[static_cast<std::size_t>(best_r)][static_cast<std::size_t>(best_c)] =
          bit + 1;
      row_used[static_cast<std::size_t>(best_r)] |= m;
      col_used[static_cast<std::size_t>(best_c)] |= m;
      --remaining;
      if (self(self)) return true;
      ++remaining;
      grid[static_cast<std::size_t>(best_r)][static_cast<std::size_t>(best_c)] =
          0;
      row_used[static_cast<std::size_t>(best_r)] &= ~m;
      col_used[static_cast<std::size_t>(best_c)] &= ~m;
    }
    return false;
  };

  if (solve(solve)) {
    LatinFilling f{y, std::move(grid)};
    detail::invariant(verify_filling(y, f).ok,
                      "exact filler produced an invalid filling");
    result.filling = std::move(f);
  }
  return result;
}

}  // namespace widealloc
