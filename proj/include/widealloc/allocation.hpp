#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "widealloc/diagram.hpp"
#include "widealloc/errors.hpp"
#include "widealloc/interval.hpp"
#include "widealloc/wideness.hpp"

namespace widealloc {

// Dense storage is cubic in the block count; plenty for desk scale.
inline constexpr int kMaxAllocationBlocks = 64;

// The integer table z(i,j,k), defined for 1 <= j,k <= i <= p. Entry (i,j,k)
// counts the cells of row block i that lie in column block j and carry a
// symbol of block k.
class Allocation {
 public:
  explicit Allocation(int p) : p_(p) {
    detail::require(p >= 1, "allocation needs at least one block");
    detail::require(p <= kMaxAllocationBlocks,
                    "allocation block count exceeds gate");
    z_.assign(static_cast<std::size_t>(p) * p * p, 0);
  }

  int num_blocks() const { return p_; }

  long long z(int i, int j, int k) const { return z_[index(i, j, k)]; }

  void set_z(int i, int j, int k, long long v) { z_[index(i, j, k)] = v; }

  void add_z(int i, int j, int k, long long v) { z_[index(i, j, k)] += v; }

  bool operator==(const Allocation& o) const {
    return p_ == o.p_ && z_ == o.z_;
  }

 private:
  std::size_t index(int i, int j, int k) const {
    detail::require(1 <= i && i <= p_ && 1 <= j && j <= i && 1 <= k && k <= i,
                    "allocation index out of range (need j,k <= i <= p)");
    return (static_cast<std::size_t>(i - 1) * p_ + (j - 1)) * p_ + (k - 1);
  }

  int p_;
  std::vector<long long> z_;
};

struct AllocationViolation {
  enum class Kind {
    kNegativeEntry,  // z(i,j,k) < 0
    kRowSum,         // sum_k z(i,j,k) != count(i)*width_step(j)
    kColumnSum,      // sum_j z(i,j,k) != count(i)*width_step(k)
    kCapacity,       // sum_{i>=max(j,k)} z(i,j,k) > width_step(j)*width_step(k)
  };

  Kind kind = Kind::kNegativeEntry;
  int i = 0, j = 0, k = 0;  // indices of the violated constraint (0 = unused)
  long long lhs = 0, rhs = 0;

  std::string describe() const {
    const std::string at = "(" + std::to_string(i) + "," + std::to_string(j) +
                           "," + std::to_string(k) + ")";
    switch (kind) {
      case Kind::kNegativeEntry:
        return "entry z" + at + " = " + std::to_string(lhs) + " is negative";
      case Kind::kRowSum:
        return "row sum at (i=" + std::to_string(i) + ", j=" +
               std::to_string(j) + ") is " + std::to_string(lhs) +
               ", expected " + std::to_string(rhs);
      case Kind::kColumnSum:
        return "column sum at (i=" + std::to_string(i) + ", k=" +
               std::to_string(k) + ") is " + std::to_string(lhs) +
               ", expected " + std::to_string(rhs);
      case Kind::kCapacity:
        return "capacity at (j=" + std::to_string(j) + ", k=" +
               std::to_string(k) + ") is " + std::to_string(lhs) +
               ", exceeding " + std::to_string(rhs);
    }
    return "invalid violation";
  }
};

struct AllocationVerdict {
  bool ok = true;
  std::optional<AllocationViolation> violation;
};

// Checks nonnegativity, both marginal-sum families, and the capacity bounds,
// reporting the first violated constraint in a fixed scan order.
inline AllocationVerdict verify_allocation(const YoungDiagram& y,
                                           const Allocation& z) {
  const int p = y.num_blocks();
  detail::require(z.num_blocks() == p,
                  "allocation has " + std::to_string(z.num_blocks()) +
                      " blocks, diagram has " + std::to_string(p));
  using Kind = AllocationViolation::Kind;
  for (int i = 1; i <= p; ++i)
    for (int j = 1; j <= i; ++j)
      for (int k = 1; k <= i; ++k)
        if (z.z(i, j, k) < 0)
          return {false,
                  AllocationViolation{Kind::kNegativeEntry, i, j, k,
                                      z.z(i, j, k), 0}};
  for (int i = 1; i <= p; ++i)
    for (int j = 1; j <= i; ++j) {
      long long sum = 0;
      for (int k = 1; k <= i; ++k) sum += z.z(i, j, k);
      const long long want = y.count(i) * y.width_step(j);
      if (sum != want)
        return {false, AllocationViolation{Kind::kRowSum, i, j, 0, sum, want}};
    }
  for (int i = 1; i <= p; ++i)
    for (int k = 1; k <= i; ++k) {
      long long sum = 0;
      for (int j = 1; j <= i; ++j) sum += z.z(i, j, k);
      const long long want = y.count(i) * y.width_step(k);
      if (sum != want)
        return {false,
                AllocationViolation{Kind::kColumnSum, i, 0, k, sum, want}};
    }
  for (int j = 1; j <= p; ++j)
    for (int k = 1; k <= p; ++k) {
      long long sum = 0;
      for (int i = std::max(j, k); i <= p; ++i) sum += z.z(i, j, k);
      const long long cap = y.width_step(j) * y.width_step(k);
      if (sum > cap)
        return {false, AllocationViolation{Kind::kCapacity, 0, j, k, sum, cap}};
    }
  return {};
}

// --- constructive algorithm for up to three blocks ------------------------

struct XChoice {
  long long x = 0;       // chosen z(2,1,1)
  IntInterval range;     // feasible interval for z(2,1,1)
};

// Feasible interval for z(2,1,1) given the block-1/2 profile, and the chosen
// value (its left endpoint, picked by a three-way maximum case split).
inline XChoice choose_x(const YoungDiagram& y) {
  detail::require(y.num_blocks() >= 2, "choose_x needs at least two blocks");
  require_wide(y);
  const long long a1 = y.len(1), e1 = y.count(1), e2 = y.count(2),
                  b2 = y.width_step(2);
  const IntInterval range = {
      std::max({0LL, e2 * (a1 - b2), a1 * (e2 - b2)}),
      std::min({a1 * e2, a1 * (a1 - e1), a1 * e2 - b2 * (e2 - b2)})};
  detail::invariant(!range.empty(),
                    "feasible interval for z(2,1,1) is empty on a wide diagram");
  long long x = 0;
  if (b2 >= a1 && b2 >= e2)
    x = 0;
  else if (a1 >= e2)
    x = e2 * (a1 - b2);
  else
    x = a1 * (e2 - b2);
  detail::invariant(x == range.lo,
                    "case split for z(2,1,1) disagrees with interval endpoint");
  return {x, range};
}

namespace detail {

// Mutable state of the three-block exchange search. The symmetric entry
// z(3,1,2) is kept equal to z(3,2,1) (named y_ here) throughout.
struct ThreeBlockState {
  long long u = 0;  // z(3,1,1)
  long long y = 0;  // z(3,2,1) = z(3,1,2)
  long long w = 0;  // z(3,2,2)

  long long s1() const { return u + y; }       // z(3,1,1) + z(3,2,1)
  long long s2() const { return y + w; }       // z(3,2,1) + z(3,2,2)
  long long s() const { return u + 2 * y + w; }
};

struct ThreeBlockRanges {
  IntInterval u, y, w;      // per-variable feasibility
  IntInterval s1, s2, total;  // pair sums and the four-variable sum
};

inline bool state_admissible(const ThreeBlockState& st,
                             const ThreeBlockRanges& r) {
  return r.y.contains(st.y) && r.w.contains(st.w) && r.s1.contains(st.s1()) &&
         r.s2.contains(st.s2()) && r.total.contains(st.s());
}

}  // namespace detail

// Builds an allocation for a wide diagram with at most three blocks.
// For p = 3 the free entries are fixed by interval feasibility plus a local
// exchange search; everything else follows from the marginal sums.
inline Allocation allocate(const YoungDiagram& y) {
  const int p = y.num_blocks();
  detail::require(p <= 3,
                  "constructive allocation supports at most three blocks; "
                  "use complete_top_block to experiment with more");
  require_wide(y);

  Allocation out(p);
  const long long a1 = y.len(1), e1 = y.count(1);
  out.set_z(1, 1, 1, a1 * e1);  // forced by the block-1 row sum
  if (p == 1) return out;

  const long long e2 = y.count(2), b2 = y.width_step(2);
  const long long x = choose_x(y).x;
  out.set_z(2, 1, 1, x);
  out.set_z(2, 1, 2, a1 * e2 - x);
  out.set_z(2, 2, 1, a1 * e2 - x);
  out.set_z(2, 2, 2, b2 * e2 - a1 * e2 + x);
  if (p == 2) {
    const AllocationVerdict v = verify_allocation(y, out);
    detail::invariant(v.ok, "two-block construction failed verification: " +
                              v.violation->describe());
    return out;
  }

  const long long a2 = y.len(2), e3 = y.count(3), b3 = y.width_step(3);

  detail::ThreeBlockRanges r;
  r.u = {0, a1 * (a1 - e1) - x};
  r.y = {0, x - a1 * (e2 - b2)};
  r.w = {0, a1 * e2 - b2 * (e2 - b2) - x};
  r.s1 = {std::max(0LL, a1 * (e3 - b3)),
          std::min(a1 * e3, a1 * (a2 - e1 - e2))};
  r.s2 = {std::max(0LL, b2 * (e3 - b3)), std::min(b2 * e3, b2 * (a2 - e2))};
  const IntInterval j1 = r.s1 + r.s2;
  const IntInterval j2 = {(a2 - b3) * e3, (a2 - b3) * e3 + b3 * b3};
  r.total = j1.intersect(j2);
  for (const IntInterval* iv : {&r.u, &r.y, &r.w, &r.s1, &r.s2, &r.total})
    detail::invariant(!iv->empty(),
                      "three-block feasibility interval is empty on a wide "
                      "diagram");

  // Deterministic seed: smallest admissible four-variable sum, split by
  // clamping toward the first summand's interval at each level.
  const long long s = r.total.lo;
  const long long s1 = r.s1.clamp(s - r.s2.lo);
  const long long s2 = s - s1;
  detail::invariant(r.s2.contains(s2), "pair-sum split left its interval");

  detail::ThreeBlockState st;
  st.y = r.y.clamp(s2 - r.w.lo);
  st.w = s2 - st.y;
  st.u = s1 - st.y;
  detail::invariant(r.w.contains(st.w), "corner split left its interval");
  detail::invariant(state_admissible(st, r),
                    "initial three-block state is not admissible");

  // Exchange search: walk u into its interval while keeping everything else
  // admissible. Moves are tried in a fixed priority order per direction; the
  // first one keeps all sums, the others trade one unit of the total sum.
  struct Move {
    long long du, dy, dw;
    bool keep_s1, keep_s2;
  };
  const long long budget = 4 * y.widest() * y.widest();
  long long steps = 0;
  while (!r.u.contains(st.u)) {
    detail::invariant(++steps <= budget, "exchange search exceeded its budget");
    const bool low = st.u < r.u.lo;
    const std::array<Move, 3> moves =
        low ? std::array<Move, 3>{{{+1, -1, +1, true, true},
                                   {+1, -1, 0, true, false},
                                   {+1, 0, 0, false, true}}}
            : std::array<Move, 3>{{{-1, +1, -1, true, true},
                                   {-1, 0, 0, false, true},
                                   {-1, +1, 0, true, false}}};
    bool moved = false;
    for (const Move& mv : moves) {
      // Guards from the construction: the sum-preserving move needs slack in
      // w; the others need room to shift the four-variable total.
      if (mv.keep_s1 && mv.keep_s2) {
        if (low ? st.w >= r.w.hi : st.w <= r.w.lo) continue;
      } else {
        const long long ds = mv.du + 2 * mv.dy + mv.dw;
        if (ds < 0 ? st.s() <= r.total.lo : st.s() >= r.total.hi) continue;
      }
      const detail::ThreeBlockState next = {st.u + mv.du, st.y + mv.dy,
                                            st.w + mv.dw};
      if (!state_admissible(next, r)) continue;
      if (mv.keep_s1)
        detail::invariant(next.s1() == st.s1(),
                          "exchange move altered a preserved pair sum");
      if (mv.keep_s2)
        detail::invariant(next.s2() == st.s2(),
                          "exchange move altered a preserved pair sum");
      st = next;
      moved = true;
      break;
    }
    detail::invariant(moved, "exchange search has no admissible move");
  }

  out.set_z(3, 1, 1, st.u);
  out.set_z(3, 1, 2, st.y);  // symmetric choice: z(3,1,2) = z(3,2,1)
  out.set_z(3, 2, 1, st.y);
  out.set_z(3, 2, 2, st.w);
  out.set_z(3, 1, 3, a1 * e3 - st.u - st.y);
  out.set_z(3, 2, 3, b2 * e3 - st.y - st.w);
  out.set_z(3, 3, 1, a1 * e3 - st.u - st.y);
  out.set_z(3, 3, 2, b2 * e3 - st.y - st.w);
  out.set_z(3, 3, 3, (b3 - a2) * e3 + st.u + 2 * st.y + st.w);

  const AllocationVerdict v = verify_allocation(y, out);
  detail::invariant(v.ok, "three-block construction failed verification: " +
                            v.violation->describe());
  return out;
}

// --- generic top-block completion ------------------------------------------

struct CompletionResult {
  std::optional<Allocation> allocation;         // present iff feasible
  std::optional<AllocationViolation> violation;  // first failure otherwise

  bool feasible() const { return allocation.has_value(); }
};

// Given an allocation of the lower p-1 blocks and chosen values for the top
// block's interior z(p,j,k) with j,k <= p-1, fills the remaining top-block
// entries by the marginal sums. Pure arithmetic: reports the first violated
// constraint instead of searching.
inline CompletionResult complete_top_block(
    const YoungDiagram& y, const Allocation& lower,
    const std::vector<std::vector<long long>>& interior) {
  const int p = y.num_blocks();
  detail::require(p >= 2, "top-block completion needs at least two blocks");
  detail::require(lower.num_blocks() == p - 1,
                  "lower allocation must cover exactly the first " +
                      std::to_string(p - 1) + " blocks");
  const AllocationVerdict lower_ok =
      verify_allocation(y.block_prefix(p - 1), lower);
  detail::require(lower_ok.ok, "lower allocation is invalid: " +
                                   lower_ok.violation->describe());
  detail::require(
      interior.size() == static_cast<std::size_t>(p - 1),
      "interior must be a (p-1) x (p-1) table of top-block entries");
  for (const auto& row : interior) {
    detail::require(row.size() == static_cast<std::size_t>(p - 1),
                    "interior must be a (p-1) x (p-1) table of top-block "
                    "entries");
    for (long long v : row)
      detail::require(v >= 0, "interior entries must be nonnegative");
  }

  Allocation full(p);
  for (int i = 1; i <= p - 1; ++i)
    for (int j = 1; j <= i; ++j)
      for (int k = 1; k <= i; ++k) full.set_z(i, j, k, lower.z(i, j, k));

  const long long ep = y.count(p);
  long long interior_total = 0;
  for (int j = 1; j <= p - 1; ++j)
    for (int k = 1; k <= p - 1; ++k) {
      const long long v = interior[static_cast<std::size_t>(j - 1)]
                                  [static_cast<std::size_t>(k - 1)];
      full.set_z(p, j, k, v);
      interior_total += v;
    }
  for (int j = 1; j <= p - 1; ++j) {
    long long row = 0;
    for (int k = 1; k <= p - 1; ++k) row += full.z(p, j, k);
    full.set_z(p, j, p, ep * y.width_step(j) - row);
  }
  for (int k = 1; k <= p - 1; ++k) {
    long long col = 0;
    for (int j = 1; j <= p - 1; ++j) col += full.z(p, j, k);
    full.set_z(p, p, k, ep * y.width_step(k) - col);
  }
  full.set_z(p, p, p,
             (y.width_step(p) - y.len(p - 1)) * ep + interior_total);

  using Kind = AllocationViolation::Kind;
  for (int j = 1; j <= p; ++j) {
    if (full.z(p, j, p) < 0)
      return {std::nullopt, AllocationViolation{Kind::kNegativeEntry, p, j, p,
                                                full.z(p, j, p), 0}};
    if (full.z(p, p, j) < 0)
      return {std::nullopt, AllocationViolation{Kind::kNegativeEntry, p, p, j,
                                                full.z(p, p, j), 0}};
  }
  for (int j = 1; j <= p; ++j)
    for (int k = 1; k <= p; ++k) {
      long long sum = 0;
      for (int i = std::max(j, k); i <= p; ++i) sum += full.z(i, j, k);
      const long long cap = y.width_step(j) * y.width_step(k);
      if (sum > cap)
        return {std::nullopt,
                AllocationViolation{Kind::kCapacity, 0, j, k, sum, cap}};
    }

  const AllocationVerdict v = verify_allocation(y, full);
  detail::invariant(v.ok, "completed allocation failed verification: " +
                            v.violation->describe());
  return {std::move(full), std::nullopt};
}

// --- residual capacities for three blocks ----------------------------------

// slack(i,j,k) = width_step(j)*width_step(k) - sum_{l=max(j,k)}^{i} z(l,j,k):
// the part of the capacity bound still unused after row blocks up to i.
struct ResidualTable {
  std::array<std::array<std::array<long long, 4>, 4>, 4> slack_{};  // 1-based
  std::array<long long, 4> col_block_slack{};  // total slack per column block

  long long slack(int i, int j, int k) const {
    detail::require(1 <= j && j <= 3 && 1 <= k && k <= 3 &&
                        std::max(j, k) <= i && i <= 3,
                    "residual index out of range");
    return slack_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                 [static_cast<std::size_t>(k)];
  }
};

inline ResidualTable residuals(const YoungDiagram& y, const Allocation& z) {
  detail::require(y.num_blocks() == 3, "residual table is defined for exactly "
                                       "three blocks");
  const AllocationVerdict v = verify_allocation(y, z);
  detail::require(v.ok, "allocation is invalid: " + v.violation->describe());

  ResidualTable t;
  for (int j = 1; j <= 3; ++j)
    for (int k = 1; k <= 3; ++k) {
      long long used = 0;
      for (int i = std::max(j, k); i <= 3; ++i) {
        used += z.z(i, j, k);
        t.slack_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                [static_cast<std::size_t>(k)] =
            y.width_step(j) * y.width_step(k) - used;
      }
    }
  for (int j = 1; j <= 3; ++j) {
    long long total = 0;
    for (int k = 1; k <= 3; ++k) total += t.slack(3, j, k);
    t.col_block_slack[static_cast<std::size_t>(j)] = total;
  }

  // Capacity slack is nonnegative once the allocation verifies, and the
  // per-column-block totals collapse to closed forms in the block profile.
  const long long a3 = y.len(3);
  const std::array<long long, 4> want = {
      0, y.len(1) * (a3 - y.count(1) - y.count(2) - y.count(3)),
      y.width_step(2) * (a3 - y.count(2) - y.count(3)),
      y.width_step(3) * (a3 - y.count(3))};
  for (int j = 1; j <= 3; ++j) {
    for (int k = 1; k <= 3; ++k)
      for (int i = std::max(j, k); i <= 3; ++i)
        detail::invariant(t.slack(i, j, k) >= 0, "negative residual slack");
    detail::invariant(
        t.col_block_slack[static_cast<std::size_t>(j)] ==
            want[static_cast<std::size_t>(j)],
        "column-block slack disagrees with its closed form");
  }
  return t;
}

}  // namespace widealloc
