#include "widealloc/flow.hpp"

#include <gtest/gtest.h>

#include <vector>

namespace wa = widealloc;
namespace wd = widealloc::detail;

TEST(MaxFlow, SingleEdge) {
  wd::MaxFlow f(2);
  const int e = f.add_edge(0, 1, 7);
  EXPECT_EQ(f.run(0, 1), 7);
  EXPECT_EQ(f.flow_on(e), 7);
}

TEST(MaxFlow, BottleneckPath) {
  wd::MaxFlow f(3);
  f.add_edge(0, 1, 5);
  const int e = f.add_edge(1, 2, 3);
  EXPECT_EQ(f.run(0, 2), 3);
  EXPECT_EQ(f.flow_on(e), 3);
}

TEST(MaxFlow, RequiresAugmentingAcrossBothPaths) {
  // Classic diamond with a cross edge; max flow is 2000, achieved only if
  // flow can be rerouted away from the cross edge.
  wd::MaxFlow f(4);
  f.add_edge(0, 1, 1000);
  f.add_edge(0, 2, 1000);
  f.add_edge(1, 3, 1000);
  f.add_edge(2, 3, 1000);
  f.add_edge(1, 2, 1);
  EXPECT_EQ(f.run(0, 3), 2000);
}

TEST(MaxFlow, DisconnectedSink) {
  wd::MaxFlow f(3);
  f.add_edge(0, 1, 4);
  EXPECT_EQ(f.run(0, 2), 0);
}

TEST(SolveTransport, SimpleSquare) {
  // 2x2 with ample bounds: any solution matching the marginals works.
  std::vector<wd::TransportEdge> edges = {
      {0, 0, 0, 5}, {0, 1, 0, 5}, {1, 0, 0, 5}, {1, 1, 0, 5}};
  ASSERT_TRUE(wd::solve_transport({3, 2}, {4, 1}, edges));
  long long r0 = edges[0].flow + edges[1].flow;
  long long r1 = edges[2].flow + edges[3].flow;
  long long c0 = edges[0].flow + edges[2].flow;
  long long c1 = edges[1].flow + edges[3].flow;
  EXPECT_EQ(r0, 3);
  EXPECT_EQ(r1, 2);
  EXPECT_EQ(c0, 4);
  EXPECT_EQ(c1, 1);
  for (const auto& e : edges) {
    EXPECT_GE(e.flow, e.lb);
    EXPECT_LE(e.flow, e.ub);
  }
}

TEST(SolveTransport, LowerBoundsForceFlow) {
  // The lower bound on the (0,1) edge forces one unit away from the cheap
  // corner; bounds are tight enough to pin the whole solution.
  std::vector<wd::TransportEdge> edges = {
      {0, 0, 0, 2}, {0, 1, 1, 1}, {1, 0, 0, 2}, {1, 1, 0, 0}};
  ASSERT_TRUE(wd::solve_transport({2, 2}, {3, 1}, edges));
  EXPECT_EQ(edges[0].flow, 1);
  EXPECT_EQ(edges[1].flow, 1);
  EXPECT_EQ(edges[2].flow, 2);
  EXPECT_EQ(edges[3].flow, 0);
}

TEST(SolveTransport, InfeasibleCases) {
  // Total mismatch.
  {
    std::vector<wd::TransportEdge> edges = {{0, 0, 0, 9}};
    EXPECT_FALSE(wd::solve_transport({3}, {2}, edges));
  }
  // Lower bounds exceed a demand.
  {
    std::vector<wd::TransportEdge> edges = {{0, 0, 2, 3}, {0, 1, 0, 3}};
    EXPECT_FALSE(wd::solve_transport({3}, {1, 2}, edges));
  }
  // Upper bounds too small to carry the supply.
  {
    std::vector<wd::TransportEdge> edges = {{0, 0, 0, 1}, {0, 1, 0, 1}};
    EXPECT_FALSE(wd::solve_transport({3}, {2, 1}, edges));
  }
}

TEST(SolveTransport, PerfectMatchingOnUnitMarginals) {
  // 0/1 edges with unit marginals is a bipartite perfect-matching problem.
  // Here the only perfect matching is the anti-diagonal.
  std::vector<wd::TransportEdge> edges = {
      {0, 2, 0, 1}, {1, 1, 0, 1}, {1, 2, 0, 1}, {2, 0, 0, 1}, {2, 1, 0, 1}};
  ASSERT_TRUE(wd::solve_transport({1, 1, 1}, {1, 1, 1}, edges));
  EXPECT_EQ(edges[0].flow, 1);  // row 0 -> col 2 (its only edge)
  EXPECT_EQ(edges[1].flow, 1);  // row 1 -> col 1 (col 2 is taken)
  EXPECT_EQ(edges[3].flow, 1);  // row 2 -> col 0 (its only remaining option)
}

TEST(SolveTransport, Deterministic) {
  auto run = [] {
    std::vector<wd::TransportEdge> edges;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) edges.push_back({r, c, 0, 3});
    EXPECT_TRUE(wd::solve_transport({3, 3, 3, 3}, {3, 3, 3, 3}, edges));
    std::vector<long long> flows;
    for (const auto& e : edges) flows.push_back(e.flow);
    return flows;
  };
  EXPECT_EQ(run(), run());
}
