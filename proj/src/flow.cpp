#include "eulertrail/flow.hpp"

#include <algorithm>
#include <queue>

namespace eulertrail {

FlowNetwork::FlowNetwork(int nodes) : g_(nodes) {}

int FlowNetwork::add_edge(int u, int v, long long cap) {
  int id = static_cast<int>(ids_.size());
  ids_.push_back({u, static_cast<int>(g_[u].size())});
  orig_cap_.push_back(cap);
  g_[u].push_back({v, cap, static_cast<int>(g_[v].size()) + (u == v ? 1 : 0)});
  g_[v].push_back({u, 0, static_cast<int>(g_[u].size()) - 1});
  return id;
}

long long FlowNetwork::flow(int id) const {
  const Edge& e = g_[ids_[id].first][ids_[id].second];
  return orig_cap_[id] - e.cap;
}

long long FlowNetwork::capacity(int id) const { return orig_cap_[id]; }

int FlowNetwork::edge_head(int id) const { return g_[ids_[id].first][ids_[id].second].to; }

bool FlowNetwork::bfs(int s, int t) {
  level_.assign(g_.size(), -1);
  std::queue<int> q;
  level_[s] = 0;
  q.push(s);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (const Edge& e : g_[v])
      if (e.cap > 0 && level_[e.to] < 0) {
        level_[e.to] = level_[v] + 1;
        q.push(e.to);
      }
  }
  return level_[t] >= 0;
}

long long FlowNetwork::dfs(int v, int t, long long f) {
  if (v == t) return f;
  for (int& i = it_[v]; i < static_cast<int>(g_[v].size()); ++i) {
    Edge& e = g_[v][i];
    if (e.cap > 0 && level_[v] < level_[e.to]) {
      long long d = dfs(e.to, t, std::min(f, e.cap));
      if (d > 0) {
        e.cap -= d;
        g_[e.to][e.rev].cap += d;
        return d;
      }
    }
  }
  return 0;
}

long long FlowNetwork::max_flow(int s, int t, long long limit) {
  long long total = 0;
  while (total < limit && bfs(s, t)) {
    it_.assign(g_.size(), 0);
    long long f;
    while (total < limit && (f = dfs(s, t, limit - total)) > 0) total += f;
  }
  return total;
}

std::vector<char> FlowNetwork::residual_reachable(int s) const {
  std::vector<char> seen(g_.size(), 0);
  std::vector<int> stack{s};
  seen[s] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const Edge& e : g_[v])
      if (e.cap > 0 && !seen[e.to]) {
        seen[e.to] = 1;
        stack.push_back(e.to);
      }
  }
  return seen;
}

}  // namespace eulertrail
