#pragma once

#include <limits>
#include <vector>

namespace eulertrail {

// Dinic on an explicit edge list. Edges are scanned in insertion order so the
// resulting flow is a deterministic function of the insertion sequence.
class FlowNetwork {
 public:
  static constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

  explicit FlowNetwork(int nodes);

  int nodes() const { return static_cast<int>(g_.size()); }
  // returns an edge id usable with flow()
  int add_edge(int u, int v, long long cap);
  long long max_flow(int s, int t, long long limit = kInf);
  long long flow(int id) const;
  long long capacity(int id) const;
  int edge_tail(int id) const { return ids_[id].first; }
  int edge_head(int id) const;
  // nodes reachable from s in the residual network
  std::vector<char> residual_reachable(int s) const;

 private:
  struct Edge {
    int to;
    long long cap;
    int rev;
  };
  bool bfs(int s, int t);
  long long dfs(int v, int t, long long f);

  std::vector<std::vector<Edge>> g_;
  std::vector<std::pair<int, int>> ids_;
  std::vector<long long> orig_cap_;
  std::vector<int> level_, it_;
};

}  // namespace eulertrail
