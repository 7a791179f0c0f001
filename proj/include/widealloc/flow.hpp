#pragma once

#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

namespace widealloc::detail {

// Dinic max-flow on a small directed network. Deterministic: edges keep
// insertion order, BFS levels and DFS scans are index-ordered.
class MaxFlow {
 public:
  explicit MaxFlow(int nodes)
      : head_(static_cast<std::size_t>(nodes), -1),
        level_(static_cast<std::size_t>(nodes)),
        it_(static_cast<std::size_t>(nodes)) {}

  // Returns the edge id; the residual twin is id^1.
  int add_edge(int from, int to, long long cap) {
    const int id = static_cast<int>(to_.size());
    to_.push_back(to);
    cap_.push_back(cap);
    next_.push_back(head_[static_cast<std::size_t>(from)]);
    head_[static_cast<std::size_t>(from)] = id;
    to_.push_back(from);
    cap_.push_back(0);
    next_.push_back(head_[static_cast<std::size_t>(to)]);
    head_[static_cast<std::size_t>(to)] = id + 1;
    return id;
  }

  long long flow_on(int edge_id) const {
    return cap_[static_cast<std::size_t>(edge_id) ^ 1];
  }

  long long run(int source, int sink) {
    long long total = 0;
    while (bfs(source, sink)) {
      it_ = head_;
      while (long long pushed =
                 dfs(source, sink, std::numeric_limits<long long>::max()))
        total += pushed;
    }
    return total;
  }

 private:
  bool bfs(int source, int sink) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    q.push(source);
    level_[static_cast<std::size_t>(source)] = 0;
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int e = head_[static_cast<std::size_t>(v)]; e != -1;
           e = next_[static_cast<std::size_t>(e)]) {
        const int u = to_[static_cast<std::size_t>(e)];
        if (cap_[static_cast<std::size_t>(e)] > 0 &&
            level_[static_cast<std::size_t>(u)] < 0) {
          level_[static_cast<std::size_t>(u)] =
              level_[static_cast<std::size_t>(v)] + 1;
          q.push(u);
        }
      }
    }
    return level_[static_cast<std::size_t>(sink)] >= 0;
  }

  long long dfs(int v, int sink, long long limit) {
    if (v == sink) return limit;
    for (int& e = it_[static_cast<std::size_t>(v)]; e != -1;
         e = next_[static_cast<std::size_t>(e)]) {
      const int u = to_[static_cast<std::size_t>(e)];
      if (cap_[static_cast<std::size_t>(e)] <= 0 ||
          level_[static_cast<std::size_t>(u)] !=
              level_[static_cast<std::size_t>(v)] + 1)
        continue;
      const long long pushed =
          dfs(u, sink, std::min(limit, cap_[static_cast<std::size_t>(e)]));
      if (pushed > 0) {
        cap_[static_cast<std::size_t>(e)] -= pushed;
        cap_[static_cast<std::size_t>(e) ^ 1] += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<int> head_, to_, next_;
  std::vector<long long> cap_;
  std::vector<int> level_, it_;
};

struct TransportEdge {
  int from = 0;  // supply-side index
  int to = 0;    // demand-side index
  long long lb = 0, ub = 0;
  long long flow = 0;  // filled in by solve_transport
};

// Integral transportation with per-edge lower/upper bounds and exact
// marginals: find flow with lb <= flow <= ub on each edge, edges out of
// supply node r summing to supply[r] and into demand node c summing to
// demand[c]. Lower bounds are shifted out, the rest is one max-flow call.
// Returns false when infeasible.
inline bool solve_transport(const std::vector<long long>& supply,
                            const std::vector<long long>& demand,
                            std::vector<TransportEdge>& edges) {
  const int nr = static_cast<int>(supply.size());
  const int nc = static_cast<int>(demand.size());
  std::vector<long long> rem_supply = supply;
  std::vector<long long> rem_demand = demand;
  for (const TransportEdge& e : edges) {
    if (e.lb > e.ub) return false;
    rem_supply[static_cast<std::size_t>(e.from)] -= e.lb;
    rem_demand[static_cast<std::size_t>(e.to)] -= e.lb;
  }
  long long total_supply = 0, total_demand = 0;
  for (long long v : rem_supply) {
    if (v < 0) return false;
    total_supply += v;
  }
  for (long long v : rem_demand) {
    if (v < 0) return false;
    total_demand += v;
  }
  if (total_supply != total_demand) return false;

  const int source = nr + nc, sink = source + 1;
  MaxFlow net(nr + nc + 2);
  std::vector<int> ids(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i)
    ids[i] = net.add_edge(edges[i].from, nr + edges[i].to,
                          edges[i].ub - edges[i].lb);
  for (int r = 0; r < nr; ++r)
    net.add_edge(source, r, rem_supply[static_cast<std::size_t>(r)]);
  for (int c = 0; c < nc; ++c)
    net.add_edge(nr + c, sink, rem_demand[static_cast<std::size_t>(c)]);

  if (net.run(source, sink) != total_supply) return false;
  for (std::size_t i = 0; i < edges.size(); ++i)
    edges[i].flow = edges[i].lb + net.flow_on(ids[i]);
  return true;
}

}  // namespace widealloc::detail
