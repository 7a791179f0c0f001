#pragma once

#include <optional>
#include <string>
#include <vector>

#include "widealloc/diagram.hpp"
#include "widealloc/errors.hpp"

namespace widealloc {

// Scale gate for the exhaustive wideness oracle (2^m row subsets).
inline constexpr long long kOracleMaxRows = 18;

// Description of the first failing check of a wideness decider. `lhs` is the
// quantity that must be >= `rhs`; a valid witness satisfies lhs < rhs.
struct WidenessWitness {
  enum class Kind {
    kSubsetPrefix,  // oracle: a row subset whose top-t rows fall short
    kRowCount,      // fast: block prefix Y_k has more rows than columns
    kTailPair,      // tails/fast: top len(j) rows of Y_k vs leftmost columns
  };

  Kind kind = Kind::kTailPair;
  std::vector<long long> subset;  // row lengths, longest first (kSubsetPrefix)
  long long t = 0;                // failing prefix depth (kSubsetPrefix)
  int k = 0;                      // block index of the tail Y_k
  int j = 0;                      // block index of the compared width (kTailPair)
  long long lhs = 0;
  long long rhs = 0;

  std::string describe() const {
    switch (kind) {
      case Kind::kSubsetPrefix: {
        std::string rows;
        for (long long v : subset) {
          if (!rows.empty()) rows += ' ';
          rows += std::to_string(v);
        }
        return "row subset (" + rows + "): top " + std::to_string(t) +
               " rows hold " + std::to_string(lhs) + " cells, top " +
               std::to_string(t) + " columns hold " + std::to_string(rhs);
      }
      case Kind::kRowCount:
        return "block prefix Y_" + std::to_string(k) + " has " +
               std::to_string(rhs) + " rows but only " + std::to_string(lhs) +
               " columns";
      case Kind::kTailPair:
        return "in Y_" + std::to_string(k) + ", top rows (width index " +
               std::to_string(j) + ") hold " + std::to_string(lhs) +
               " cells vs " + std::to_string(rhs) + " in the leftmost columns";
    }
    return "invalid witness";
  }
};

struct WidenessReport {
  bool wide = true;
  std::optional<WidenessWitness> witness;
  long long checks = 0;           // inequality instances actually evaluated
  long long skipped_implied = 0;  // skipped: already implied by a row-count check
  long long skipped_trivial = 0;  // skipped: trivially satisfied
};

// Exhaustive decider straight from the definition: every subdiagram formed by
// a subset of the rows must dominate its conjugate. Row subsets with equal
// content are deduplicated by enumerating per-block multiplicities, which
// covers all 2^m subsets up to repetition. Gated to m <= kOracleMaxRows.
inline WidenessReport is_wide_oracle(const YoungDiagram& y) {
  if (y.num_rows() > kOracleMaxRows)
    throw ScaleLimitError("wideness oracle is gated to " +
                          std::to_string(kOracleMaxRows) + " rows, got " +
                          std::to_string(y.num_rows()));
  const int p = y.num_blocks();
  std::vector<long long> a(static_cast<std::size_t>(p));
  std::vector<long long> e(static_cast<std::size_t>(p));
  for (int i = 1; i <= p; ++i) {
    a[static_cast<std::size_t>(i - 1)] = y.len(i);
    e[static_cast<std::size_t>(i - 1)] = y.count(i);
  }

  WidenessReport report;
  std::vector<long long> c(static_cast<std::size_t>(p), 0);  // chosen rows per block
  for (;;) {
    // Odometer step over all multiplicity vectors 0 <= c[i] <= e[i].
    int pos = 0;
    while (pos < p && c[static_cast<std::size_t>(pos)] ==
                          e[static_cast<std::size_t>(pos)]) {
      c[static_cast<std::size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == p) break;
    ++c[static_cast<std::size_t>(pos)];

    ++report.checks;
    long long rows = 0;
    for (long long v : c) rows += v;

    // Compare, for t = 1..rows, the cells of the t longest rows of the
    // subset (lhs) with the cells of its t longest columns (rhs). The
    // column prefix equals sum_i c[i]*min(a[i], t). Beyond t = rows both
    // sides equal the subset size, so no further t can fail.
    int top = p - 1;
    long long top_left = c[static_cast<std::size_t>(top)];
    long long lhs = 0;
    int small = 0;
    long long cells_small = 0;
    long long rows_big = rows;
    for (long long t = 1; t <= rows; ++t) {
      while (top_left == 0) {
        --top;
        top_left = c[static_cast<std::size_t>(top)];
      }
      lhs += a[static_cast<std::size_t>(top)];
      --top_left;
      while (small < p && a[static_cast<std::size_t>(small)] <= t) {
        cells_small += a[static_cast<std::size_t>(small)] *
                       c[static_cast<std::size_t>(small)];
        rows_big -= c[static_cast<std::size_t>(small)];
        ++small;
      }
      const long long rhs = cells_small + t * rows_big;
      if (lhs < rhs) {
        WidenessWitness w;
        w.kind = WidenessWitness::Kind::kSubsetPrefix;
        for (int i = p - 1; i >= 0; --i)
          w.subset.insert(w.subset.end(),
                          static_cast<std::size_t>(c[static_cast<std::size_t>(i)]),
                          a[static_cast<std::size_t>(i)]);
        w.t = t;
        w.lhs = lhs;
        w.rhs = rhs;
        report.wide = false;
        report.witness = std::move(w);
        return report;
      }
    }
  }
  return report;
}

// Tail-based decider: for every block prefix Y_k and every width a_j with
// j <= k, the top a_j rows of Y_k must hold at least as many cells as its
// leftmost a_j columns. Quadratically many checks, no skips.
inline WidenessReport is_wide_tails(const YoungDiagram& y) {
  WidenessReport report;
  for (int k = 1; k <= y.num_blocks(); ++k) {
    for (int j = 1; j <= k; ++j) {
      ++report.checks;
      const long long top = y.cells_in_top_rows(j, k);
      const long long left = y.cells_in_left_columns(j, k);
      if (top < left) {
        report.wide = false;
        report.witness = WidenessWitness{
            WidenessWitness::Kind::kTailPair, {}, 0, k, j, top, left};
        return report;
      }
    }
  }
  return report;
}

// Quadratic decider with the two pruning rules: the (j, k) comparison is
// skipped when len(j) <= count(k) (implied by the row-count checks) and when
// len(j) >= rows_in_blocks(1, k) (trivially satisfied). The remaining
// instances are exactly the middle case of the top-rows cell count.
inline WidenessReport is_wide_fast(const YoungDiagram& y) {
  WidenessReport report;
  const int p = y.num_blocks();
  for (int k = 1; k <= p; ++k) {
    ++report.checks;
    const long long cols = y.len(k);
    const long long rows = y.rows_in_blocks(1, k);
    if (cols < rows) {
      report.wide = false;
      report.witness = WidenessWitness{
          WidenessWitness::Kind::kRowCount, {}, 0, k, 0, cols, rows};
      return report;
    }
  }
  for (int k = 1; k <= p; ++k) {
    for (int j = 1; j <= k - 1; ++j) {
      const long long aj = y.len(j);
      if (aj <= y.count(k)) {
        ++report.skipped_implied;
        continue;
      }
      if (aj >= y.rows_in_blocks(1, k)) {
        ++report.skipped_trivial;
        continue;
      }
      ++report.checks;
      const long long top = y.cells_in_top_rows(j, k);
      const long long left = y.cells_in_left_columns(j, k);
      if (top < left) {
        report.wide = false;
        report.witness = WidenessWitness{
            WidenessWitness::Kind::kTailPair, {}, 0, k, j, top, left};
        return report;
      }
    }
  }
  return report;
}

// Throws NotWideError carrying the fast decider's witness.
inline void require_wide(const YoungDiagram& y) {
  const WidenessReport r = is_wide_fast(y);
  if (!r.wide)
    throw NotWideError("diagram (" + y.to_text() +
                       ") is not wide: " + r.witness->describe());
}

}  // namespace widealloc
