#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "widealloc/errors.hpp"

namespace widealloc {

// Hard input gates. Beyond these the algorithms are still correct but the
// int64 overflow analysis and the desk-scale runtime promises no longer hold.
inline constexpr long long kMaxRowLength = 1'000'000;
inline constexpr long long kMaxRowCount = 1'000'000;

// One block of equal-length rows: `count` rows of length `len`.
struct Block {
  long long len = 0;    // row length within the block
  long long count = 0;  // number of rows of that length

  bool operator==(const Block&) const = default;
};

// A Young diagram stored as its block profile: blocks are indexed 1..p from
// the shortest rows up, so len(1) < len(2) < ... < len(p). Row 1 of the
// diagram is the longest row (top), row m the shortest (bottom).
class YoungDiagram {
 public:
  YoungDiagram() = default;

  // Blocks must be given shortest-first with strictly increasing lengths.
  static YoungDiagram from_blocks(std::vector<Block> blocks) {
    detail::require(!blocks.empty(), "diagram must have at least one block");
    long long rows = 0;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      detail::require(blocks[i].len > 0, "block length must be positive");
      detail::require(blocks[i].count > 0, "block count must be positive");
      if (blocks[i].len > kMaxRowLength)
        throw ScaleLimitError("row length exceeds the gate of " +
                              std::to_string(kMaxRowLength));
      if (i > 0)
        detail::require(blocks[i - 1].len < blocks[i].len,
                        "block lengths must be strictly increasing");
      rows += blocks[i].count;
      if (rows > kMaxRowCount)
        throw ScaleLimitError("row count exceeds the gate of " +
                              std::to_string(kMaxRowCount));
    }
    YoungDiagram d;
    d.blocks_ = std::move(blocks);
    d.build_cumulative();
    return d;
  }

  // Row lengths in any order; canonicalized internally.
  static YoungDiagram from_row_lengths(std::vector<long long> lens) {
    detail::require(!lens.empty(), "diagram must have at least one row");
    std::sort(lens.begin(), lens.end());
    std::vector<Block> blocks;
    for (long long v : lens) {
      detail::require(v > 0, "row length must be positive");
      if (!blocks.empty() && blocks.back().len == v)
        ++blocks.back().count;
      else
        blocks.push_back({v, 1});
    }
    return from_blocks(std::move(blocks));
  }

  // --- basic shape ----------------------------------------------------

  // Number of blocks p.
  int num_blocks() const { return static_cast<int>(blocks_.size()); }

  // a_i: row length of block i (1-based, ascending in i).
  long long len(int i) const { return block_at(i).len; }

  // e_i: number of rows in block i (1-based).
  long long count(int i) const { return block_at(i).count; }

  // b_i = a_i - a_{i-1}: width gained at block i (a_0 = 0).
  long long width_step(int i) const {
    return len(i) - (i >= 2 ? len(i - 1) : 0);
  }

  // m: total number of rows.
  long long num_rows() const { return ecum_.back(); }

  // |Y|: total number of cells.
  long long cells() const { return cellcum_.back(); }

  // Length of the longest row, a_p.
  long long widest() const { return blocks_.back().len; }

  const std::vector<Block>& blocks() const { return blocks_; }

  // Row lengths sorted longest-first (materializes all m rows).
  std::vector<long long> row_lengths() const {
    std::vector<long long> out;
    out.reserve(static_cast<std::size_t>(num_rows()));
    for (int i = num_blocks(); i >= 1; --i)
      out.insert(out.end(), static_cast<std::size_t>(count(i)), len(i));
    return out;
  }

  // --- block-range quantities ------------------------------------------

  // Number of rows in blocks i..k (1 <= i <= k <= p).
  long long rows_in_blocks(int i, int k) const {
    check_range(i, k);
    return ecum_[static_cast<std::size_t>(k)] -
           ecum_[static_cast<std::size_t>(i - 1)];
  }

  // Number of cells in blocks 1..k, i.e. |Y_k|.
  long long cells_in_blocks(int k) const {
    check_range(k, k);
    return cellcum_[static_cast<std::size_t>(k)];
  }

  // The subdiagram Y_k made of blocks 1..k (the rows_in_blocks(1,k)
  // shortest rows).
  YoungDiagram block_prefix(int k) const {
    check_range(k, k);
    return from_blocks(std::vector<Block>(blocks_.begin(),
                                          blocks_.begin() + k));
  }

  // Cells of Y_k lying in its leftmost len(j) columns (1 <= j <= k <= p).
  // Counted row by row: rows below block j are wholly included, rows in
  // blocks j..k are cut to length len(j).
  long long cells_in_left_columns(int j, int k) const {
    check_range(j, k);
    return cellcum_[static_cast<std::size_t>(j - 1)] +
           len(j) * rows_in_blocks(j, k);
  }

  // Same quantity accumulated by vertical strips of columns: strip u covers
  // the width_step(u) columns gained at block u and meets rows_in_blocks(u,k)
  // rows of Y_k. Used as an independent cross-check of the row-slab route.
  long long cells_in_left_columns_by_strips(int j, int k) const {
    check_range(j, k);
    long long total = 0;
    for (int u = 1; u <= j; ++u)
      total += width_step(u) * rows_in_blocks(u, k);
    return total;
  }

  // Cells of Y_k lying in its top len(j) rows, i.e. in the len(j) longest
  // rows of Y_k (1 <= j <= k <= p).
  long long cells_in_top_rows(int j, int k) const {
    check_range(j, k);
    const long long aj = len(j);
    if (aj <= count(k)) return aj * len(k);
    if (aj >= rows_in_blocks(1, k)) return cells_in_blocks(k);
    // Unique i in [2, k] with rows_in_blocks(i,k) < aj <= rows_in_blocks(i-1,k):
    // blocks i..k are wholly included, the remainder comes from block i-1.
    int lo = 2, hi = k;
    while (lo < hi) {
      int mid = (lo + hi) / 2;
      if (rows_in_blocks(mid, k) < aj)
        hi = mid;
      else
        lo = mid + 1;
    }
    const int i = lo;
    const long long whole =
        cellcum_[static_cast<std::size_t>(k)] -
        cellcum_[static_cast<std::size_t>(i - 1)];
    return whole + (aj - rows_in_blocks(i, k)) * len(i - 1);
  }

  // --- derived diagrams -------------------------------------------------

  // Conjugate (transpose) diagram. Column lengths of Y, as a block profile:
  // the width_step(i) columns gained at block i all have length
  // rows_in_blocks(i, p).
  YoungDiagram conjugate() const {
    std::vector<Block> out;
    out.reserve(blocks_.size());
    const int p = num_blocks();
    for (int i = p; i >= 1; --i)
      out.push_back({rows_in_blocks(i, p), width_step(i)});
    return from_blocks(std::move(out));
  }

  // Subdiagram formed by rows r..m, rows numbered 1..m from the longest
  // down. tail(1) is the whole diagram, tail(m) the single shortest row.
  YoungDiagram tail(long long r) const {
    detail::require(r >= 1 && r <= num_rows(), "tail row index out of range");
    long long drop = r - 1;  // longest rows removed
    std::vector<Block> out = blocks_;
    while (drop > 0) {
      Block& top = out.back();
      if (top.count > drop) {
        top.count -= drop;
        drop = 0;
      } else {
        drop -= top.count;
        out.pop_back();
      }
    }
    return from_blocks(std::move(out));
  }

  bool operator==(const YoungDiagram& o) const { return blocks_ == o.blocks_; }

  // Row lengths longest-first, space separated ("5 4 3 3").
  std::string to_text() const {
    std::string out;
    for (int i = num_blocks(); i >= 1; --i)
      for (long long t = 0; t < count(i); ++t) {
        if (!out.empty()) out += ' ';
        out += std::to_string(len(i));
      }
    return out;
  }

 private:
  const Block& block_at(int i) const {
    detail::require(i >= 1 && i <= num_blocks(), "block index out of range");
    return blocks_[static_cast<std::size_t>(i - 1)];
  }

  void check_range(int i, int k) const {
    detail::require(1 <= i && i <= k && k <= num_blocks(),
                    "block range out of bounds");
  }

  void build_cumulative() {
    ecum_.assign(1, 0);
    cellcum_.assign(1, 0);
    for (const Block& b : blocks_) {
      ecum_.push_back(ecum_.back() + b.count);
      cellcum_.push_back(cellcum_.back() + b.len * b.count);
    }
  }

  std::vector<Block> blocks_;           // ascending by len
  std::vector<long long> ecum_;         // ecum_[i] = count(1) + ... + count(i)
  std::vector<long long> cellcum_;      // cellcum_[i] = |Y_i|
};

// Per-pair summary of the two cell counts compared by the wideness test.
struct TailStats {
  int j = 0;
  int k = 0;
  long long left_columns_cells = 0;  // cells of Y_k in its leftmost len(j) columns
  long long top_rows_cells = 0;      // cells of Y_k in its top len(j) rows
  long long rows = 0;                // rows_in_blocks(j, k)
};

inline TailStats tail_stats(const YoungDiagram& y, int j, int k) {
  return {j, k, y.cells_in_left_columns(j, k), y.cells_in_top_rows(j, k),
          y.rows_in_blocks(j, k)};
}

// True when `lhs` dominates `rhs`: for every t, the t longest rows of lhs
// hold at least as many cells as the t longest rows of rhs (shorter list
// padded with zero rows). Piecewise-linear in t, so it suffices to compare
// at every block boundary of either diagram.
inline bool dominates(const YoungDiagram& lhs, const YoungDiagram& rhs) {
  // Prefix cell count of the t longest rows.
  auto prefix = [](const YoungDiagram& d, long long t) -> long long {
    long long total = 0;
    for (int i = d.num_blocks(); i >= 1 && t > 0; --i) {
      long long take = std::min(t, d.count(i));
      total += take * d.len(i);
      t -= take;
    }
    return total;
  };
  std::vector<long long> breakpoints;
  for (const YoungDiagram* d : {&lhs, &rhs}) {
    long long rows = 0;
    for (int i = d->num_blocks(); i >= 1; --i) {
      rows += d->count(i);
      breakpoints.push_back(rows);
    }
  }
  breakpoints.push_back(std::max(lhs.num_rows(), rhs.num_rows()));
  for (long long t : breakpoints)
    if (prefix(lhs, t) < prefix(rhs, t)) return false;
  return true;
}

}  // namespace widealloc
