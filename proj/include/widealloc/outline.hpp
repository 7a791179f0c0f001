#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "widealloc/allocation.hpp"
#include "widealloc/diagram.hpp"
#include "widealloc/errors.hpp"
#include "widealloc/filling.hpp"
#include "widealloc/flow.hpp"

namespace widealloc {

inline constexpr int kMaxOutlineGroups = 128;
inline constexpr long long kMaxLatinOrder = 2048;
// Working-memory gate for reconstruction: order * groups^2 tensor entries.
inline constexpr long long kReconstructionTensorGate = 1LL << 24;

// How an n x n Latin square is amalgamated: consecutive row groups of sizes
// rows[i], column groups of sizes cols[j], symbol groups of sizes symbols[k].
struct ReductionPartition {
  std::vector<long long> rows;
  std::vector<long long> cols;
  std::vector<long long> symbols;

  bool operator==(const ReductionPartition&) const = default;
};

class LatinSquare {
 public:
  // Grid is row-major with symbols 1..n; Latin-ness is validated here.
  static LatinSquare from_grid(long long n, std::vector<int> grid) {
    detail::require(n >= 1, "Latin square order must be positive");
    if (n > kMaxLatinOrder)
      throw ScaleLimitError("Latin square order " + std::to_string(n) +
                            " exceeds the gate of " +
                            std::to_string(kMaxLatinOrder));
    detail::require(grid.size() == static_cast<std::size_t>(n) *
                                       static_cast<std::size_t>(n),
                    "Latin square grid has the wrong size");
    std::vector<long long> stamp(static_cast<std::size_t>(n) + 1, -1);
    for (long long r = 0; r < n; ++r)
      for (long long c = 0; c < n; ++c) {
        const int s = grid[static_cast<std::size_t>(r * n + c)];
        detail::require(s >= 1 && s <= n, "Latin square symbol out of range");
        detail::require(stamp[static_cast<std::size_t>(s)] != r,
                        "row " + std::to_string(r + 1) + " repeats symbol " +
                            std::to_string(s));
        stamp[static_cast<std::size_t>(s)] = r;
      }
    std::fill(stamp.begin(), stamp.end(), -1);
    for (long long c = 0; c < n; ++c)
      for (long long r = 0; r < n; ++r) {
        const int s = grid[static_cast<std::size_t>(r * n + c)];
        detail::require(stamp[static_cast<std::size_t>(s)] != c,
                        "column " + std::to_string(c + 1) +
                            " repeats symbol " + std::to_string(s));
        stamp[static_cast<std::size_t>(s)] = c;
      }
    LatinSquare L;
    L.n_ = n;
    L.grid_ = std::move(grid);
    return L;
  }

  long long order() const { return n_; }

  // 0-based row/column; symbols are 1..n.
  int at(long long r, long long c) const {
    detail::require(r >= 0 && r < n_ && c >= 0 && c < n_,
                    "Latin square index out of range");
    return grid_[static_cast<std::size_t>(r * n_ + c)];
  }

  bool operator==(const LatinSquare& o) const {
    return n_ == o.n_ && grid_ == o.grid_;
  }

 private:
  long long n_ = 0;
  std::vector<int> grid_;
};

// Square matrix of symbol multisets with divisor n. Cells and symbol groups
// are 0-based; multisets are dense count vectors over the m symbol groups.
class OutlineRectangle {
 public:
  OutlineRectangle(int groups, long long divisor)
      : m_(groups), n_(divisor) {
    detail::require(groups >= 1, "outline needs at least one group");
    if (groups > kMaxOutlineGroups)
      throw ScaleLimitError("outline group count " + std::to_string(groups) +
                            " exceeds the gate of " +
                            std::to_string(kMaxOutlineGroups));
    detail::require(divisor >= 1, "outline divisor must be positive");
    counts_.assign(static_cast<std::size_t>(m_) * m_ * m_, 0);
  }

  int groups() const { return m_; }
  long long divisor() const { return n_; }

  long long count(int i, int j, int k) const { return counts_[index(i, j, k)]; }
  void set_count(int i, int j, int k, long long v) {
    detail::require(v >= 0, "outline counts must be nonnegative");
    counts_[index(i, j, k)] = v;
  }
  void add_count(int i, int j, int k, long long v) {
    counts_[index(i, j, k)] += v;
  }

  long long cell_size(int i, int j) const {
    long long total = 0;
    for (int k = 0; k < m_; ++k) total += count(i, j, k);
    return total;
  }
  long long row_total(int i) const {
    long long total = 0;
    for (int j = 0; j < m_; ++j) total += cell_size(i, j);
    return total;
  }
  long long col_total(int j) const {
    long long total = 0;
    for (int i = 0; i < m_; ++i) total += cell_size(i, j);
    return total;
  }
  long long symbol_total(int k) const {
    long long total = 0;
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j < m_; ++j) total += count(i, j, k);
    return total;
  }

  bool operator==(const OutlineRectangle& o) const {
    return m_ == o.m_ && n_ == o.n_ && counts_ == o.counts_;
  }

 private:
  std::size_t index(int i, int j, int k) const {
    detail::require(0 <= i && i < m_ && 0 <= j && j < m_ && 0 <= k && k < m_,
                    "outline index out of range");
    return (static_cast<std::size_t>(i) * m_ + j) * m_ + k;
  }

  int m_;
  long long n_;
  std::vector<long long> counts_;
};

struct OutlineViolation {
  enum class Kind {
    kDivisibility,  // a row/column/symbol total is not divisible by n
    kCellSize,      // cell (i,j) size != row_total(i)*col_total(j)/n^2
    kRowSymbol,     // symbol count in a row off its quota
    kColumnSymbol,  // symbol count in a column off its quota
    kTotals,        // grand total != n^2
  };

  Kind kind = Kind::kTotals;
  char axis = ' ';  // for kDivisibility: 'r', 'c', or 's'
  int i = 0, j = 0, k = 0;
  long long lhs = 0, rhs = 0;

  std::string describe() const {
    switch (kind) {
      case Kind::kDivisibility:
        return std::string("total of ") +
               (axis == 'r' ? "row " : axis == 'c' ? "column " : "symbol ") +
               std::to_string(i + 1) + " is " + std::to_string(lhs) +
               ", not divisible by " + std::to_string(rhs);
      case Kind::kCellSize:
        return "cell (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
               ") holds " + std::to_string(lhs) + " symbols, expected " +
               std::to_string(rhs);
      case Kind::kRowSymbol:
        return "row " + std::to_string(i + 1) + " holds " +
               std::to_string(lhs) + " copies of symbol " +
               std::to_string(k + 1) + ", expected " + std::to_string(rhs);
      case Kind::kColumnSymbol:
        return "column " + std::to_string(j + 1) + " holds " +
               std::to_string(lhs) + " copies of symbol " +
               std::to_string(k + 1) + ", expected " + std::to_string(rhs);
      case Kind::kTotals:
        return "grand total is " + std::to_string(lhs) + ", expected " +
               std::to_string(rhs);
    }
    return "invalid violation";
  }
};

struct OutlineVerdict {
  bool ok = true;
  std::optional<OutlineViolation> violation;
};

// Checks the defining conditions: divisibility of all totals by n, cell
// sizes, per-row and per-column symbol quotas, and the grand total n^2.
inline OutlineVerdict verify_outline(const OutlineRectangle& c) {
  using Kind = OutlineViolation::Kind;
  const int m = c.groups();
  const long long n = c.divisor();
  std::vector<long long> rho(static_cast<std::size_t>(m)),
      col(static_cast<std::size_t>(m)), sym(static_cast<std::size_t>(m));
  long long grand = 0;
  for (int i = 0; i < m; ++i) {
    rho[static_cast<std::size_t>(i)] = c.row_total(i);
    col[static_cast<std::size_t>(i)] = c.col_total(i);
    sym[static_cast<std::size_t>(i)] = c.symbol_total(i);
    grand += rho[static_cast<std::size_t>(i)];
  }
  if (grand != n * n)
    return {false, OutlineViolation{Kind::kTotals, ' ', 0, 0, 0, grand, n * n}};
  for (int i = 0; i < m; ++i) {
    if (rho[static_cast<std::size_t>(i)] % n != 0)
      return {false, OutlineViolation{Kind::kDivisibility, 'r', i, 0, 0,
                                      rho[static_cast<std::size_t>(i)], n}};
    if (col[static_cast<std::size_t>(i)] % n != 0)
      return {false, OutlineViolation{Kind::kDivisibility, 'c', i, 0, 0,
                                      col[static_cast<std::size_t>(i)], n}};
    if (sym[static_cast<std::size_t>(i)] % n != 0)
      return {false, OutlineViolation{Kind::kDivisibility, 's', i, 0, 0,
                                      sym[static_cast<std::size_t>(i)], n}};
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const long long want = rho[static_cast<std::size_t>(i)] *
                             col[static_cast<std::size_t>(j)] / (n * n);
      if (c.cell_size(i, j) != want)
        return {false, OutlineViolation{Kind::kCellSize, ' ', i, j, 0,
                                        c.cell_size(i, j), want}};
    }
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k) {
      long long have = 0;
      for (int j = 0; j < m; ++j) have += c.count(i, j, k);
      const long long want = rho[static_cast<std::size_t>(i)] *
                             sym[static_cast<std::size_t>(k)] / (n * n);
      if (have != want)
        return {false,
                OutlineViolation{Kind::kRowSymbol, ' ', i, 0, k, have, want}};
    }
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < m; ++k) {
      long long have = 0;
      for (int i = 0; i < m; ++i) have += c.count(i, j, k);
      const long long want = col[static_cast<std::size_t>(j)] *
                             sym[static_cast<std::size_t>(k)] / (n * n);
      if (have != want)
        return {false, OutlineViolation{Kind::kColumnSymbol, ' ', 0, j, k,
                                        have, want}};
    }
  return {};
}

namespace detail {

// 0-based group index of `pos` under consecutive group sizes `sizes`.
inline int group_of(const std::vector<long long>& sizes, long long pos) {
  long long end = 0;
  for (std::size_t g = 0; g < sizes.size(); ++g) {
    end += sizes[g];
    if (pos < end) return static_cast<int>(g);
  }
  throw InternalInvariantError("position beyond partition range");
}

inline void check_partition(const std::vector<long long>& sizes, long long n,
                            const char* what) {
  detail::require(!sizes.empty(), std::string(what) + " partition is empty");
  long long total = 0;
  for (long long v : sizes) {
    detail::require(v >= 1, std::string(what) + " partition has a non-positive part");
    total += v;
  }
  detail::require(total == n, std::string(what) + " partition sums to " +
                                  std::to_string(total) + ", expected " +
                                  std::to_string(n));
}

}  // namespace detail

// Amalgamates L by the partition triple: cell (i,j) of the result counts the
// symbol groups of L's entries in row group i x column group j.
inline OutlineRectangle reduce_latin(const LatinSquare& L,
                                     const ReductionPartition& part) {
  const long long n = L.order();
  detail::check_partition(part.rows, n, "row");
  detail::check_partition(part.cols, n, "column");
  detail::check_partition(part.symbols, n, "symbol");
  detail::require(part.rows.size() == part.cols.size() &&
                      part.rows.size() == part.symbols.size(),
                  "partition triple must have equal group counts");
  const int m = static_cast<int>(part.rows.size());
  if (m > kMaxOutlineGroups)
    throw ScaleLimitError("outline group count " + std::to_string(m) +
                          " exceeds the gate of " +
                          std::to_string(kMaxOutlineGroups));

  std::vector<int> row_group(static_cast<std::size_t>(n)),
      col_group(static_cast<std::size_t>(n)),
      sym_group(static_cast<std::size_t>(n) + 1);
  for (long long r = 0; r < n; ++r)
    row_group[static_cast<std::size_t>(r)] = detail::group_of(part.rows, r);
  for (long long c = 0; c < n; ++c)
    col_group[static_cast<std::size_t>(c)] = detail::group_of(part.cols, c);
  for (long long s = 1; s <= n; ++s)
    sym_group[static_cast<std::size_t>(s)] =
        detail::group_of(part.symbols, s - 1);

  OutlineRectangle out(m, n);
  for (long long r = 0; r < n; ++r)
    for (long long c = 0; c < n; ++c)
      out.add_count(row_group[static_cast<std::size_t>(r)],
                    col_group[static_cast<std::size_t>(c)],
                    sym_group[static_cast<std::size_t>(L.at(r, c))], 1);
  detail::invariant(verify_outline(out).ok,
                    "reduction of a Latin square failed outline verification");
  return out;
}

struct EmbeddedOutline {
  OutlineRectangle outline;
  ReductionPartition part;
};

// Embeds an allocation into a (p+1) x (p+1) outline rectangle with divisor
// n = 2*a_p: the allocation occupies the lower-left triangle, and the border
// row/column/symbol group absorbs the complement via the marginal sums.
inline EmbeddedOutline embed_allocation(const YoungDiagram& y,
                                        const Allocation& z) {
  const AllocationVerdict ok = verify_allocation(y, z);
  detail::require(ok.ok, "allocation is invalid: " + ok.violation->describe());

  const int p = y.num_blocks();
  const long long n = 2 * y.widest();
  std::vector<long long> b(static_cast<std::size_t>(p) + 2, 0),
      e(static_cast<std::size_t>(p) + 2, 0);
  for (int i = 1; i <= p; ++i) {
    b[static_cast<std::size_t>(i)] = y.width_step(i);
    e[static_cast<std::size_t>(i)] = y.count(i);
  }
  b[static_cast<std::size_t>(p + 1)] = y.widest();
  e[static_cast<std::size_t>(p + 1)] = n - y.num_rows();
  detail::invariant(e[static_cast<std::size_t>(p + 1)] >= 1,
                    "border row group of the embedding is empty");

  // t[i][j][k], all 1-based up to p+1.
  const int q = p + 2;
  std::vector<long long> t(static_cast<std::size_t>(q) * q * q, 0);
  auto at = [&](int i, int j, int k) -> long long& {
    return t[(static_cast<std::size_t>(i) * q + j) * q + k];
  };
  for (int i = 1; i <= p; ++i)
    for (int j = 1; j <= i; ++j)
      for (int k = 1; k <= i; ++k) at(i, j, k) = z.z(i, j, k);
  for (int i = 1; i <= p; ++i)
    for (int j = i + 1; j <= p; ++j)
      at(i, j, p + 1) =
          e[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
  for (int i = 1; i <= p; ++i)
    for (int k = 1; k <= p + 1; ++k) {
      long long used = 0;
      for (int l = 1; l <= p; ++l) used += at(i, l, k);
      at(i, p + 1, k) = e[static_cast<std::size_t>(i)] *
                            b[static_cast<std::size_t>(k)] -
                        used;
    }
  for (int j = 1; j <= p + 1; ++j)
    for (int k = 1; k <= p + 1; ++k) {
      long long used = 0;
      for (int l = 1; l <= p; ++l) used += at(l, j, k);
      at(p + 1, j, k) = b[static_cast<std::size_t>(j)] *
                            b[static_cast<std::size_t>(k)] -
                        used;
    }

  OutlineRectangle out(p + 1, n);
  for (int i = 1; i <= p + 1; ++i)
    for (int j = 1; j <= p + 1; ++j)
      for (int k = 1; k <= p + 1; ++k) {
        detail::invariant(at(i, j, k) >= 0,
                          "embedding produced a negative count");
        out.set_count(i - 1, j - 1, k - 1, at(i, j, k));
      }
  detail::invariant(verify_outline(out).ok,
                    "embedded outline failed verification");

  ReductionPartition part;
  part.rows.assign(e.begin() + 1, e.begin() + p + 2);
  part.cols.assign(b.begin() + 1, b.begin() + p + 2);
  part.symbols = part.cols;
  return {std::move(out), std::move(part)};
}

struct ReconstructedSquare {
  LatinSquare square;
  ReductionPartition part;
};

// Rebuilds a Latin square whose reduction is exactly `c`. Works by peeling
// one line off an amalgamated group at a time — rows first, then columns,
// then symbols — always from the heaviest remaining group (ties to the lowest
// index). Each peel is an integral transportation problem with floor/ceil
// bounds around the proportional share; feasibility of every step follows
// from the outline conditions and is asserted, never assumed.
inline ReconstructedSquare outline_to_latin(const OutlineRectangle& c) {
  const OutlineVerdict ok = verify_outline(c);
  detail::require(ok.ok, "outline is invalid: " + ok.violation->describe());

  const int m = c.groups();
  const long long n = c.divisor();
  if (n > kMaxLatinOrder)
    throw ScaleLimitError("outline divisor " + std::to_string(n) +
                          " exceeds the Latin order gate of " +
                          std::to_string(kMaxLatinOrder));
  ReductionPartition part;
  part.rows.resize(static_cast<std::size_t>(m));
  part.cols.resize(static_cast<std::size_t>(m));
  part.symbols.resize(static_cast<std::size_t>(m));
  for (int g = 0; g < m; ++g) {
    part.rows[static_cast<std::size_t>(g)] = c.row_total(g) / n;
    part.cols[static_cast<std::size_t>(g)] = c.col_total(g) / n;
    part.symbols[static_cast<std::size_t>(g)] = c.symbol_total(g) / n;
  }

  const auto all_unit = [](const std::vector<long long>& w) {
    return std::all_of(w.begin(), w.end(), [](long long v) { return v == 1; });
  };

  std::vector<int> grid(static_cast<std::size_t>(n * n), 0);
  if (all_unit(part.rows) && all_unit(part.cols) && all_unit(part.symbols)) {
    // Already a Latin square written as singleton multisets.
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        for (int k = 0; k < m; ++k)
          if (c.count(i, j, k) == 1)
            grid[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                 static_cast<std::size_t>(j)] = k + 1;
    LatinSquare L = LatinSquare::from_grid(n, std::move(grid));
    detail::invariant(reduce_latin(L, part) == c,
                      "reconstruction does not reduce back to its outline");
    return {std::move(L), std::move(part)};
  }

  if (n * m * m > kReconstructionTensorGate)
    throw ScaleLimitError(
        "outline too large for reconstruction working memory");

  // --- phase 1: split row groups into single rows -------------------------
  // State per original row group: a remainder tensor over (column group,
  // symbol group) plus the unit rows already peeled off, in peel order.
  const std::size_t mm = static_cast<std::size_t>(m) * m;
  std::vector<std::vector<long long>> remainder(static_cast<std::size_t>(m));
  std::vector<std::vector<std::vector<long long>>> unit_rows(
      static_cast<std::size_t>(m));
  std::vector<long long> gw = part.rows;  // remaining group weights
  for (int i = 0; i < m; ++i) {
    remainder[static_cast<std::size_t>(i)].assign(mm, 0);
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        remainder[static_cast<std::size_t>(i)]
                 [static_cast<std::size_t>(j) * m + k] = c.count(i, j, k);
  }
  for (;;) {
    int pick = -1;
    for (int i = 0; i < m; ++i)
      if (gw[static_cast<std::size_t>(i)] >= 2 &&
          (pick < 0 ||
           gw[static_cast<std::size_t>(i)] > gw[static_cast<std::size_t>(pick)]))
        pick = i;
    if (pick < 0) break;
    const long long g = gw[static_cast<std::size_t>(pick)];
    std::vector<long long>& rem = remainder[static_cast<std::size_t>(pick)];
    std::vector<detail::TransportEdge> edges;
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) {
        const long long have = rem[static_cast<std::size_t>(j) * m + k];
        if (have == 0) continue;
        edges.push_back({j, k, have / g, (have + g - 1) / g, 0});
      }
    detail::invariant(
        detail::solve_transport(part.cols, part.symbols, edges),
        "row peel is infeasible, contradicting the outline conditions");
    std::vector<long long> unit(mm, 0);
    for (const detail::TransportEdge& edge : edges) {
      unit[static_cast<std::size_t>(edge.from) * m + edge.to] = edge.flow;
      rem[static_cast<std::size_t>(edge.from) * m + edge.to] -= edge.flow;
    }
    unit_rows[static_cast<std::size_t>(pick)].push_back(std::move(unit));
    --gw[static_cast<std::size_t>(pick)];
  }
  // Row r of the final square, as counts over (column group, symbol group):
  // peeled rows in peel order, then the weight-1 remainder, groups in order.
  std::vector<std::vector<long long>> row_counts;
  row_counts.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < m; ++i) {
    for (std::vector<long long>& u : unit_rows[static_cast<std::size_t>(i)])
      row_counts.push_back(std::move(u));
    row_counts.push_back(std::move(remainder[static_cast<std::size_t>(i)]));
  }
  detail::invariant(static_cast<long long>(row_counts.size()) == n,
                    "row peeling produced the wrong number of rows");

  // --- phase 2: split column groups into single columns -------------------
  // Afterwards sym_of[r][c] is the symbol group in cell (r, c).
  std::vector<std::vector<int>> group_cols(static_cast<std::size_t>(m));
  gw = part.cols;
  for (;;) {
    int pick = -1;
    for (int j = 0; j < m; ++j)
      if (gw[static_cast<std::size_t>(j)] >= 2 &&
          (pick < 0 ||
           gw[static_cast<std::size_t>(j)] > gw[static_cast<std::size_t>(pick)]))
        pick = j;
    if (pick < 0) break;
    const long long h = gw[static_cast<std::size_t>(pick)];
    std::vector<detail::TransportEdge> edges;
    for (long long r = 0; r < n; ++r)
      for (int k = 0; k < m; ++k) {
        const long long have =
            row_counts[static_cast<std::size_t>(r)]
                      [static_cast<std::size_t>(pick) * m + k];
        if (have == 0) continue;
        edges.push_back({static_cast<int>(r), k, have / h, (have + h - 1) / h,
                         0});
      }
    const std::vector<long long> supply(static_cast<std::size_t>(n), 1);
    detail::invariant(
        detail::solve_transport(supply, part.symbols, edges),
        "column peel is infeasible, contradicting the outline conditions");
    std::vector<int> col(static_cast<std::size_t>(n), -1);
    for (const detail::TransportEdge& edge : edges)
      if (edge.flow == 1) {
        detail::invariant(col[static_cast<std::size_t>(edge.from)] < 0,
                          "column peel assigned a row twice");
        col[static_cast<std::size_t>(edge.from)] = edge.to;
        row_counts[static_cast<std::size_t>(edge.from)]
                  [static_cast<std::size_t>(pick) * m + edge.to] -= 1;
      }
    // One symbol per row in the new column.
    group_cols[static_cast<std::size_t>(pick)].insert(
        group_cols[static_cast<std::size_t>(pick)].end(), col.begin(),
        col.end());
    --gw[static_cast<std::size_t>(pick)];
  }
  // sym_of, column-major assembly: peeled columns, then the remainder column.
  std::vector<int> sym_of(static_cast<std::size_t>(n * n), -1);
  {
    long long col_pos = 0;
    for (int j = 0; j < m; ++j) {
      const long long peeled =
          static_cast<long long>(group_cols[static_cast<std::size_t>(j)].size()) /
          n;
      for (long long u = 0; u < peeled; ++u, ++col_pos)
        for (long long r = 0; r < n; ++r)
          sym_of[static_cast<std::size_t>(r * n + col_pos)] =
              group_cols[static_cast<std::size_t>(j)]
                        [static_cast<std::size_t>(u * n + r)];
      // Remainder column: the single symbol group left per row.
      for (long long r = 0; r < n; ++r) {
        int left = -1;
        for (int k = 0; k < m; ++k)
          if (row_counts[static_cast<std::size_t>(r)]
                        [static_cast<std::size_t>(j) * m + k] == 1) {
            detail::invariant(left < 0, "remainder column is not single");
            left = k;
          }
        detail::invariant(left >= 0, "remainder column lost its symbol");
        sym_of[static_cast<std::size_t>(r * n + col_pos)] = left;
      }
      ++col_pos;
    }
    detail::invariant(col_pos == n, "column peeling lost a column");
  }

  // --- phase 3: split symbol groups into single symbols -------------------
  // Peeling one symbol off group k = finding a perfect matching among the
  // remaining occurrences of k (each row and column holds its weight many).
  std::vector<long long> base(static_cast<std::size_t>(m) + 1, 0);
  for (int k = 0; k < m; ++k)
    base[static_cast<std::size_t>(k) + 1] =
        base[static_cast<std::size_t>(k)] +
        part.symbols[static_cast<std::size_t>(k)];
  std::vector<std::vector<std::pair<int, int>>> occ(
      static_cast<std::size_t>(m));
  for (long long r = 0; r < n; ++r)
    for (long long cidx = 0; cidx < n; ++cidx)
      occ[static_cast<std::size_t>(sym_of[static_cast<std::size_t>(r * n + cidx)])]
          .push_back({static_cast<int>(r), static_cast<int>(cidx)});
  std::vector<long long> peeled(static_cast<std::size_t>(m), 0);
  gw = part.symbols;
  for (;;) {
    int pick = -1;
    for (int k = 0; k < m; ++k)
      if (gw[static_cast<std::size_t>(k)] >= 2 &&
          (pick < 0 ||
           gw[static_cast<std::size_t>(k)] > gw[static_cast<std::size_t>(pick)]))
        pick = k;
    if (pick < 0) break;
    std::vector<detail::TransportEdge> edges;
    edges.reserve(occ[static_cast<std::size_t>(pick)].size());
    for (const auto& [r, cidx] : occ[static_cast<std::size_t>(pick)])
      edges.push_back({r, cidx, 0, 1, 0});
    const std::vector<long long> ones(static_cast<std::size_t>(n), 1);
    detail::invariant(
        detail::solve_transport(ones, ones, edges),
        "symbol peel is infeasible, contradicting the outline conditions");
    const int symbol = static_cast<int>(base[static_cast<std::size_t>(pick)] +
                                        peeled[static_cast<std::size_t>(pick)] +
                                        1);
    std::vector<std::pair<int, int>> rest;
    rest.reserve(occ[static_cast<std::size_t>(pick)].size() -
                 static_cast<std::size_t>(n));
    for (std::size_t idx = 0; idx < edges.size(); ++idx) {
      const auto& [r, cidx] = occ[static_cast<std::size_t>(pick)][idx];
      if (edges[idx].flow == 1)
        grid[static_cast<std::size_t>(r) * static_cast<std::size_t>(n) +
             static_cast<std::size_t>(cidx)] = symbol;
      else
        rest.push_back({r, cidx});
    }
    occ[static_cast<std::size_t>(pick)] = std::move(rest);
    ++peeled[static_cast<std::size_t>(pick)];
    --gw[static_cast<std::size_t>(pick)];
  }
  for (int k = 0; k < m; ++k) {
    const int symbol = static_cast<int>(base[static_cast<std::size_t>(k)] +
                                        peeled[static_cast<std::size_t>(k)] + 1);
    for (const auto& [r, cidx] : occ[static_cast<std::size_t>(k)])
      grid[static_cast<std::size_t>(r) * static_cast<std::size_t>(n) +
           static_cast<std::size_t>(cidx)] = symbol;
  }

  LatinSquare L = LatinSquare::from_grid(n, std::move(grid));
  detail::invariant(reduce_latin(L, part) == c,
                    "reconstruction does not reduce back to its outline");
  return {std::move(L), std::move(part)};
}

// Cuts the Young-diagram-shaped corner back out of a reconstructed square:
// keeps row group i restricted to the leftmost len(i) columns for i <= p and
// relabels each symbol group k back onto the range (len(k-1), len(k)].
inline LatinFilling extract_filling(const LatinSquare& L,
                                    const ReductionPartition& part,
                                    const YoungDiagram& y) {
  const int p = y.num_blocks();
  const long long n = 2 * y.widest();
  detail::require(L.order() == n, "square order does not match the embedding");
  detail::require(
      static_cast<int>(part.rows.size()) == p + 1 &&
          part.cols.size() == part.rows.size() &&
          part.symbols.size() == part.rows.size(),
      "partition shape does not match the embedding");
  for (int i = 1; i <= p; ++i) {
    detail::require(part.rows[static_cast<std::size_t>(i - 1)] == y.count(i) &&
                        part.cols[static_cast<std::size_t>(i - 1)] ==
                            y.width_step(i) &&
                        part.symbols[static_cast<std::size_t>(i - 1)] ==
                            y.width_step(i),
                    "partition groups do not match the embedding");
  }
  detail::require(part.rows[static_cast<std::size_t>(p)] == n - y.num_rows() &&
                      part.cols[static_cast<std::size_t>(p)] == y.widest() &&
                      part.symbols[static_cast<std::size_t>(p)] == y.widest(),
                  "border groups do not match the embedding");

  std::vector<long long> row_start(static_cast<std::size_t>(p) + 2, 0),
      sym_start(static_cast<std::size_t>(p) + 2, 0);
  for (int i = 1; i <= p + 1; ++i) {
    row_start[static_cast<std::size_t>(i)] =
        row_start[static_cast<std::size_t>(i - 1)] +
        part.rows[static_cast<std::size_t>(i - 1)];
    sym_start[static_cast<std::size_t>(i)] =
        sym_start[static_cast<std::size_t>(i - 1)] +
        part.symbols[static_cast<std::size_t>(i - 1)];
  }

  LatinFilling f;
  f.diagram = y;
  f.rows.reserve(static_cast<std::size_t>(y.num_rows()));
  for (int i = p; i >= 1; --i) {
    for (long long r = row_start[static_cast<std::size_t>(i - 1)];
         r < row_start[static_cast<std::size_t>(i)]; ++r) {
      std::vector<int> row;
      row.reserve(static_cast<std::size_t>(y.len(i)));
      for (long long cidx = 0; cidx < y.len(i); ++cidx) {
        const int s = L.at(r, cidx);
        // Symbol group of s and its offset within the group.
        int k = p + 1;
        while (s <= sym_start[static_cast<std::size_t>(k - 1)]) --k;
        detail::invariant(k <= i, "retained cell carries a symbol of a "
                                  "higher block than its row");
        const long long relabeled =
            (k >= 2 ? y.len(k - 1) : 0) +
            (s - sym_start[static_cast<std::size_t>(k - 1)]);
        row.push_back(static_cast<int>(relabeled));
      }
      f.rows.push_back(std::move(row));
    }
  }
  detail::invariant(verify_filling(y, f).ok,
                    "extracted filling failed verification");
  return f;
}

}  // namespace widealloc
