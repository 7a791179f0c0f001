#include "widealloc/enumerate.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <vector>

namespace wa = widealloc;

namespace {

long long distinct_values(const std::vector<long long>& rows) {
  return static_cast<long long>(
      std::set<long long>(rows.begin(), rows.end()).size());
}

}  // namespace

TEST(ForEachPartition, SequenceUpToFourCells) {
  std::vector<std::vector<long long>> got;
  wa::for_each_partition(4, 0, [&](const std::vector<long long>& rows) {
    got.push_back(rows);
  });
  const std::vector<std::vector<long long>> want = {
      {1},    {1, 1}, {1, 1, 1}, {1, 1, 1, 1}, {2},  {2, 1},
      {2, 1, 1}, {2, 2}, {3},    {3, 1},       {4}};
  EXPECT_EQ(got, want);
}

TEST(ForEachPartition, CountsMatchPartitionNumbers) {
  long long count = 0;
  wa::for_each_partition(12, 0, [&](const std::vector<long long>&) {
    ++count;
  });
  // sum of p(1)..p(12) = 1+2+3+5+7+11+15+22+30+42+56+77
  EXPECT_EQ(count, 271);
}

TEST(ForEachPartition, DistinctBoundPrunesExactly) {
  std::vector<std::vector<long long>> pruned;
  wa::for_each_partition(16, 3, [&](const std::vector<long long>& rows) {
    pruned.push_back(rows);
  });
  std::vector<std::vector<long long>> filtered;
  wa::for_each_partition(16, 0, [&](const std::vector<long long>& rows) {
    if (distinct_values(rows) <= 3) filtered.push_back(rows);
  });
  EXPECT_EQ(pruned, filtered);
  EXPECT_EQ(pruned.size(), 791u);
}

TEST(ForEachPartition, RowsAreValidPartitions) {
  wa::for_each_partition(10, 0, [](const std::vector<long long>& rows) {
    ASSERT_FALSE(rows.empty());
    EXPECT_TRUE(std::is_sorted(rows.rbegin(), rows.rend()));
    EXPECT_GE(rows.back(), 1);
  });
}

TEST(ForEachBoundedPartition, SmallBoxCount) {
  long long count = 0;
  wa::for_each_bounded_partition(3, 3, [&](const std::vector<long long>&) {
    ++count;
  });
  // Nonempty partitions inside a 3x3 box: C(6,3) - 1.
  EXPECT_EQ(count, 19);
}

TEST(ForEachBoundedPartition, LargeBoxCount) {
  long long count = 0;
  wa::for_each_bounded_partition(12, 10, [&](const std::vector<long long>&) {
    ++count;
  });
  // Nonempty partitions inside a 12x10 box: C(22,10) - 1.
  EXPECT_EQ(count, 646645);
}

TEST(ForEachBoundedPartition, RespectsBothBounds) {
  std::set<std::vector<long long>> got;
  wa::for_each_bounded_partition(4, 2, [&](const std::vector<long long>& rows) {
    EXPECT_LE(rows.size(), 4u);
    EXPECT_LE(rows.front(), 2);
    got.insert(rows);
  });
  // Each emission is unique, and cross-checking against the cell-bounded
  // enumerator over the same box gives the same set.
  EXPECT_EQ(got.size(), 14u);  // C(6,2) - 1
  std::set<std::vector<long long>> via_cells;
  wa::for_each_partition(8, 0, [&](const std::vector<long long>& rows) {
    if (rows.size() <= 4 && rows.front() <= 2) via_cells.insert(rows);
  });
  EXPECT_EQ(got, via_cells);
}
