// End-to-end acceptance battery. Each test sweeps one documented guarantee
// of the library and prints a single machine-greppable verdict line.

#include <gtest/gtest.h>

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "test_util.hpp"
#include "widealloc/widealloc.hpp"

namespace wa = widealloc;

namespace {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

void verdict(int criterion, const std::string& detail, double seconds) {
  const bool pass = !::testing::Test::HasFailure();
  std::printf("[criterion %d] %s — %s (%.1fs)\n", criterion,
              pass ? "PASS" : "FAIL", detail.c_str(), seconds);
  std::fflush(stdout);
}

}  // namespace

// 1. The three wideness deciders agree on every partition with at most 12
//    rows and parts at most 10.
TEST(Acceptance, Criterion1WidenessAgreement) {
  Stopwatch timer;
  long long diagrams = 0, disagreements = 0;
  wa::for_each_bounded_partition(12, 10,
                                 [&](const std::vector<long long>& rows) {
    const wa::YoungDiagram y = wa::YoungDiagram::from_row_lengths(rows);
    const bool oracle = wa::is_wide_oracle(y).wide;
    const bool tails = wa::is_wide_tails(y).wide;
    const bool fast = wa::is_wide_fast(y).wide;
    ++diagrams;
    if (oracle != tails || tails != fast) {
      ++disagreements;
      ADD_FAILURE() << y.to_text() << ": oracle=" << oracle
                    << " tails=" << tails << " fast=" << fast;
    }
  });
  EXPECT_EQ(diagrams, 646645);
  EXPECT_EQ(disagreements, 0);
  EXPECT_LT(timer.seconds(), 120.0);
  verdict(1,
          std::to_string(diagrams) + " diagrams, " +
              std::to_string(disagreements) + " disagreements",
          timer.seconds());
}

// 2. Every wide diagram with at most three distinct row lengths and at most
//    60 cells receives a verifying allocation, with no local-search budget
//    exhaustion.
TEST(Acceptance, Criterion2AllocationCoverage) {
  Stopwatch timer;
  long long wide = 0, verified = 0, budget_failures = 0;
  wa::for_each_partition(60, 3, [&](const std::vector<long long>& rows) {
    const wa::YoungDiagram y = wa::YoungDiagram::from_row_lengths(rows);
    if (!wa::is_wide_fast(y).wide) return;
    ++wide;
    try {
      const wa::Allocation z = wa::allocate(y);
      if (wa::verify_allocation(y, z).ok)
        ++verified;
      else
        ADD_FAILURE() << y.to_text() << ": allocation failed verification";
    } catch (const wa::InternalInvariantError& e) {
      ++budget_failures;
      ADD_FAILURE() << y.to_text() << ": " << e.what();
    }
  });
  EXPECT_EQ(verified, wide);
  EXPECT_EQ(budget_failures, 0);
  EXPECT_LT(timer.seconds(), 120.0);
  verdict(2,
          std::to_string(verified) + "/" + std::to_string(wide) +
              " wide diagrams allocated, " +
              std::to_string(budget_failures) + " budget exhaustions",
          timer.seconds());
}

// 3. Embedding each of those allocations yields a valid outline rectangle
//    whose first p row totals are n*e_i and whose first p column and symbol
//    totals are n*b_j.
TEST(Acceptance, Criterion3EmbeddingTotals) {
  Stopwatch timer;
  long long embedded = 0;
  wa::for_each_partition(60, 3, [&](const std::vector<long long>& rows) {
    const wa::YoungDiagram y = wa::YoungDiagram::from_row_lengths(rows);
    if (!wa::is_wide_fast(y).wide) return;
    const wa::EmbeddedOutline emb = wa::embed_allocation(y, wa::allocate(y));
    const long long n = 2 * y.widest();
    if (!wa::verify_outline(emb.outline).ok) {
      ADD_FAILURE() << y.to_text() << ": embedded outline invalid";
      return;
    }
    bool totals_ok = emb.outline.divisor() == n;
    for (int i = 1; i <= y.num_blocks(); ++i) {
      totals_ok = totals_ok &&
                  emb.outline.row_total(i - 1) == n * y.count(i) &&
                  emb.outline.col_total(i - 1) == n * y.width_step(i) &&
                  emb.outline.symbol_total(i - 1) == n * y.width_step(i);
    }
    if (!totals_ok)
      ADD_FAILURE() << y.to_text() << ": embedded totals off the profile";
    ++embedded;
  });
  EXPECT_GT(embedded, 0);
  verdict(3, std::to_string(embedded) + " embeddings verified",
          timer.seconds());
}

// 4. Reduction round-trips: random Latin squares under random partition
//    triples, plus reconstruction of every embedded outline from the
//    criterion-3 corpus.
TEST(Acceptance, Criterion4ReductionRoundTrip) {
  Stopwatch timer;
  std::mt19937_64 rng = test_util::make_rng();
  long long random_trips = 0;
  for (int iter = 0; iter < 100; ++iter) {
    const long long n = 2 + static_cast<long long>(iter % 7);
    const wa::LatinSquare L = test_util::random_latin(n, rng);
    // Reduction needs one group count shared by all three partitions.
    const long long groups =
        std::uniform_int_distribution<long long>(1, n)(rng);
    const wa::ReductionPartition part{
        test_util::random_composition(n, groups, rng),
        test_util::random_composition(n, groups, rng),
        test_util::random_composition(n, groups, rng)};
    const wa::OutlineRectangle o = wa::reduce_latin(L, part);
    const wa::ReconstructedSquare rec = wa::outline_to_latin(o);
    if (wa::reduce_latin(rec.square, rec.part) == o) {
      ++random_trips;
    } else {
      ADD_FAILURE() << "order " << n << " round trip diverged (iteration "
                    << iter << ")";
    }
  }
  EXPECT_EQ(random_trips, 100);

  long long reconstructed = 0;
  wa::for_each_partition(60, 3, [&](const std::vector<long long>& rows) {
    const wa::YoungDiagram y = wa::YoungDiagram::from_row_lengths(rows);
    if (!wa::is_wide_fast(y).wide) return;
    const wa::EmbeddedOutline emb = wa::embed_allocation(y, wa::allocate(y));
    try {
      const wa::ReconstructedSquare rec = wa::outline_to_latin(emb.outline);
      if (rec.part == emb.part)
        ++reconstructed;
      else
        ADD_FAILURE() << y.to_text() << ": reconstruction changed the groups";
    } catch (const std::exception& e) {
      ADD_FAILURE() << y.to_text() << ": reconstruction failed: " << e.what();
    }
  });
  EXPECT_GT(reconstructed, 0);
  verdict(4,
          std::to_string(random_trips) + "/100 random round trips, " +
              std::to_string(reconstructed) + " embedded outlines lifted",
          timer.seconds());
}

// 5. At up to 16 cells, the exhaustive filler succeeds exactly on the wide
//    diagrams.
TEST(Acceptance, Criterion5ExactFillMatchesWideness) {
  Stopwatch timer;
  long long diagrams = 0, exceptions = 0;
  wa::for_each_partition(16, 0, [&](const std::vector<long long>& rows) {
    const wa::YoungDiagram y = wa::YoungDiagram::from_row_lengths(rows);
    ++diagrams;
    try {
      const bool filled = wa::fill_exact(y).found();
      const bool wide = wa::is_wide_fast(y).wide;
      if (filled != wide)
        ADD_FAILURE() << y.to_text() << ": filled=" << filled
                      << " wide=" << wide;
    } catch (const std::exception& e) {
      ++exceptions;
      ADD_FAILURE() << y.to_text() << ": " << e.what();
    }
  });
  EXPECT_EQ(diagrams, 914);
  EXPECT_EQ(exceptions, 0);
  verdict(5,
          std::to_string(diagrams) +
              " diagrams, filling exists exactly when wide",
          timer.seconds());
}

// 6. Every wide diagram with exactly two distinct row lengths and at most 40
//    cells is filled constructively.
TEST(Acceptance, Criterion6TwoLengthPipeline) {
  Stopwatch timer;
  long long filled = 0;
  wa::for_each_partition(40, 2, [&](const std::vector<long long>& rows) {
    const wa::YoungDiagram y = wa::YoungDiagram::from_row_lengths(rows);
    if (y.num_blocks() != 2 || !wa::is_wide_fast(y).wide) return;
    const wa::PipelineResult r = wa::fill_via_allocation(y);
    if (wa::verify_filling(y, r.filling).ok)
      ++filled;
    else
      ADD_FAILURE() << y.to_text() << ": pipeline filling invalid";
  });
  EXPECT_GT(filled, 0);
  verdict(6,
          std::to_string(filled) + " two-length wide diagrams filled",
          timer.seconds());
}

// 7. On (5,4,3,3): the lower-block allocation with z(2,1,1) = 3 admits no
//    completion of the top block (checked over every candidate interior),
//    while z(2,1,1) = 2 extends.
TEST(Acceptance, Criterion7LowerAllocationExtension) {
  Stopwatch timer;
  const wa::YoungDiagram y = wa::YoungDiagram::from_row_lengths({5, 4, 3, 3});

  const auto count_completions = [&](const wa::Allocation& lower) {
    long long feasible = 0;
    // Capacity caps b_j*b_k bound every candidate interior entry.
    for (long long v11 = 0; v11 <= 9; ++v11)
      for (long long v12 = 0; v12 <= 3; ++v12)
        for (long long v21 = 0; v21 <= 3; ++v21)
          for (long long v22 = 0; v22 <= 1; ++v22)
            if (wa::complete_top_block(y, lower,
                                       {{v11, v12}, {v21, v22}})
                    .feasible())
              ++feasible;
    return feasible;
  };

  wa::Allocation stuck(2);
  stuck.set_z(1, 1, 1, 6);
  stuck.set_z(2, 1, 1, 3);
  stuck.set_z(2, 2, 2, 1);
  const long long stuck_completions = count_completions(stuck);
  EXPECT_EQ(stuck_completions, 0);

  wa::Allocation extends(2);
  extends.set_z(1, 1, 1, 6);
  extends.set_z(2, 1, 1, 2);
  extends.set_z(2, 1, 2, 1);
  extends.set_z(2, 2, 1, 1);
  const long long extension_count = count_completions(extends);
  EXPECT_GT(extension_count, 0);

  verdict(7,
          "z(2,1,1)=3 admits " + std::to_string(stuck_completions) +
              " completions, z(2,1,1)=2 admits " +
              std::to_string(extension_count),
          timer.seconds());
}

// 8. Every produced three-block allocation satisfies the closed-form residual
//    totals per column block.
TEST(Acceptance, Criterion8ResidualIdentities) {
  Stopwatch timer;
  long long checked = 0;
  wa::for_each_partition(60, 3, [&](const std::vector<long long>& rows) {
    const wa::YoungDiagram y = wa::YoungDiagram::from_row_lengths(rows);
    if (y.num_blocks() != 3 || !wa::is_wide_fast(y).wide) return;
    const wa::ResidualTable t = wa::residuals(y, wa::allocate(y));
    const long long a1 = y.len(1), a3 = y.len(3);
    const long long e1 = y.count(1), e2 = y.count(2), e3 = y.count(3);
    const long long b2 = y.width_step(2), b3 = y.width_step(3);
    const bool ok = t.col_block_slack[1] == a1 * (a3 - e1 - e2 - e3) &&
                    t.col_block_slack[2] == b2 * (a3 - e2 - e3) &&
                    t.col_block_slack[3] == b3 * (a3 - e3);
    if (ok)
      ++checked;
    else
      ADD_FAILURE() << y.to_text() << ": residual totals off closed form";
  });
  EXPECT_GT(checked, 0);
  verdict(8,
          std::to_string(checked) + " three-block allocations match the "
                                    "closed forms",
          timer.seconds());
}

// 9. At up to 16 cells, any diagram for which exhaustive search finds an
//    allocation is wide.
TEST(Acceptance, Criterion9AllocationImpliesWide) {
  Stopwatch timer;
  long long with_allocation = 0;
  wa::for_each_partition(16, 0, [&](const std::vector<long long>& rows) {
    if (!oracles::allocation_exists_exhaustive(rows)) return;
    ++with_allocation;
    const wa::YoungDiagram y = wa::YoungDiagram::from_row_lengths(rows);
    if (!wa::is_wide_fast(y).wide)
      ADD_FAILURE() << y.to_text() << ": has an allocation but is not wide";
  });
  EXPECT_GT(with_allocation, 0);
  verdict(9,
          std::to_string(with_allocation) +
              " diagrams with allocations, all wide",
          timer.seconds());
}
