#pragma once

#include <utility>
#include <vector>

#include "widealloc/allocation.hpp"
#include "widealloc/diagram.hpp"
#include "widealloc/errors.hpp"
#include "widealloc/filling.hpp"
#include "widealloc/outline.hpp"

namespace widealloc {

// Reads the allocation induced by a Latin filling: z(i,j,k) counts the cells
// in row block i and column strip j that hold a symbol from strip k. Always
// satisfies the allocation conditions when the filling verifies.
inline Allocation allocation_from_filling(const YoungDiagram& y,
                                          const LatinFilling& f) {
  const FillingVerdict ok = verify_filling(y, f);
  detail::require(ok.ok, "filling is invalid: " + ok.violation->describe());

  const int p = y.num_blocks();
  // First block whose row length is >= v, for v in 1..widest.
  auto strip_of = [&](long long v) {
    int lo = 1, hi = p;
    while (lo < hi) {
      const int mid = (lo + hi) / 2;
      if (y.len(mid) >= v)
        hi = mid;
      else
        lo = mid + 1;
    }
    return lo;
  };

  Allocation z(p);
  for (const std::vector<int>& row : f.rows) {
    const long long l = static_cast<long long>(row.size());
    const int i = strip_of(l);
    detail::invariant(y.len(i) == l, "row length does not sit on a block");
    for (std::size_t cidx = 0; cidx < row.size(); ++cidx) {
      const int j = strip_of(static_cast<long long>(cidx) + 1);
      const int k = strip_of(row[cidx]);
      z.add_z(i, j, k, 1);
    }
  }
  detail::invariant(verify_allocation(y, z).ok,
                    "allocation read off a Latin filling failed verification");
  return z;
}

struct PipelineResult {
  LatinFilling filling;
  Allocation allocation;
  OutlineRectangle outline;
  LatinSquare square;
  ReductionPartition part;
};

// End-to-end constructive route: allocate the diagram (wide, at most three
// blocks), embed the allocation into an outline rectangle of divisor twice
// the widest row, lift that to a genuine Latin square, and cut the filling
// back out of the corner.
inline PipelineResult fill_via_allocation(const YoungDiagram& y) {
  Allocation z = allocate(y);
  EmbeddedOutline emb = embed_allocation(y, z);
  ReconstructedSquare rec = outline_to_latin(emb.outline);
  detail::invariant(rec.part == emb.part,
                    "reconstruction changed the reduction partition");
  LatinFilling f = extract_filling(rec.square, rec.part, y);
  return {std::move(f), std::move(z), std::move(emb.outline),
          std::move(rec.square), std::move(rec.part)};
}

}  // namespace widealloc
