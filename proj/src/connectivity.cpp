#include "eulertrail/connectivity.hpp"

#include <algorithm>
#include <queue>

#include "eulertrail/flow.hpp"

namespace eulertrail {

std::vector<char> reachable_from(const Digraph& d, int s, bool backwards) {
  std::vector<char> seen(d.n(), 0);
  if (d.n() == 0) return seen;
  std::vector<int> stack{s};
  seen[s] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < d.n(); ++w) {
      bool arc = backwards ? d.has(w, v) : d.has(v, w);
      if (arc && !seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

bool is_strong(const Digraph& d) {
  if (d.n() <= 1) return true;
  auto f = reachable_from(d, 0), b = reachable_from(d, 0, true);
  for (int v = 0; v < d.n(); ++v)
    if (!f[v] || !b[v]) return false;
  return true;
}

std::vector<std::vector<int>> strong_components(const Digraph& d) {
  const int n = d.n();
  // iterative Tarjan
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1), stack, next(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<std::pair<int, int>> call;
  int counter = 0, ncomp = 0;
  for (int root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    call.push_back({root, 0});
    while (!call.empty()) {
      auto& [v, w] = call.back();
      if (w == 0 && index[v] < 0) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = 1;
      }
      bool descended = false;
      for (; w < n; ++w) {
        if (!d.has(v, w)) continue;
        if (index[w] < 0) {
          call.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack[w]) low[v] = std::min(low[v], index[w]);
      }
      if (descended) continue;
      if (low[v] == index[v]) {
        int x;
        do {
          x = stack.back();
          stack.pop_back();
          on_stack[x] = 0;
          comp[x] = ncomp;
        } while (x != v);
        ++ncomp;
      }
      int done = v;
      call.pop_back();
      if (!call.empty()) {
        auto& [p, pw] = call.back();
        low[p] = std::min(low[p], low[done]);
        ++pw;
      }
    }
  }
  std::vector<std::vector<int>> members(ncomp);
  for (int v = 0; v < n; ++v) members[comp[v]].push_back(v);
  // Kahn over the condensation, smallest minimum vertex first
  std::vector<std::vector<char>> edge(ncomp, std::vector<char>(ncomp, 0));
  std::vector<int> indeg(ncomp, 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (d.has(u, v) && comp[u] != comp[v] && !edge[comp[u]][comp[v]]) {
        edge[comp[u]][comp[v]] = 1;
        ++indeg[comp[v]];
      }
  auto key = [&](int c) { return members[c].front(); };
  auto cmp = [&](int a, int b) { return key(a) > key(b); };
  std::priority_queue<int, std::vector<int>, decltype(cmp)> ready(cmp);
  for (int c = 0; c < ncomp; ++c)
    if (indeg[c] == 0) ready.push(c);
  std::vector<std::vector<int>> out;
  while (!ready.empty()) {
    int c = ready.top();
    ready.pop();
    out.push_back(members[c]);
    for (int e = 0; e < ncomp; ++e)
      if (edge[c][e] && --indeg[e] == 0) ready.push(e);
  }
  return out;
}

ArcSet cut_arcs(const Digraph& d) {
  if (!is_strong(d)) throw PreconditionError("cut_arcs: digraph is not strong");
  const int n = d.n();
  if (n <= 1) return {};
  // only arcs of a BFS out-tree or in-tree rooted at 0 can be cut-arcs
  std::vector<Arc> cand;
  for (bool back : {false, true}) {
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w = 0; w < n; ++w) {
        if (seen[w]) continue;
        if (back ? d.has(w, v) : d.has(v, w)) {
          seen[w] = 1;
          q.push(w);
          cand.push_back(back ? Arc{w, v} : Arc{v, w});
        }
      }
    }
  }
  ArcSet cands = make_arcset(cand);
  std::vector<Arc> out;
  Digraph tmp = d;
  for (Arc a : cands) {
    tmp.remove_arc(a);
    if (!is_strong(tmp)) out.push_back(a);
    tmp.add_arc(a);
  }
  return make_arcset(out);
}

CutCertificate make_cut(const Digraph& d, const std::vector<char>& in_s) {
  CutCertificate c;
  for (int v = 0; v < d.n(); ++v) (in_s[v] ? c.side_s : c.side_t).push_back(v);
  for (int u : c.side_s)
    for (int v : c.side_t)
      if (d.has(u, v)) c.crossing.push_back({u, v});
  c.crossing = make_arcset(c.crossing);
  return c;
}

bool validate_cut(const Digraph& d, const CutCertificate& c) {
  std::vector<int> side(d.n(), -1);
  for (int v : c.side_s) {
    if (v < 0 || v >= d.n() || side[v] >= 0) return false;
    side[v] = 0;
  }
  for (int v : c.side_t) {
    if (v < 0 || v >= d.n() || side[v] >= 0) return false;
    side[v] = 1;
  }
  if (std::count(side.begin(), side.end(), -1) > 0) return false;
  if (c.side_s.empty() || c.side_t.empty()) return false;
  std::vector<Arc> cross;
  for (Arc a : d.arcs())
    if (side[a.tail] == 0 && side[a.head] == 1) cross.push_back(a);
  return make_arcset(cross) == c.crossing;
}

namespace {

struct PairFlow {
  long long value;
  std::vector<char> source_side;
};

PairFlow unit_flow(const Digraph& d, int s, int t, long long limit) {
  FlowNetwork net(d.n());
  for (Arc a : d.arcs()) net.add_edge(a.tail, a.head, 1);
  long long f = net.max_flow(s, t, limit);
  return {f, net.residual_reachable(s)};
}

}  // namespace

ArcConnectivity arc_connectivity(const Digraph& d) {
  ArcConnectivity r;
  const int n = d.n();
  if (n < 2) return r;
  if (!is_strong(d)) {
    auto f = reachable_from(d, 0);
    if (std::count(f.begin(), f.end(), 1) < n) {
      r.cut = make_cut(d, f);
    } else {
      auto b = reachable_from(d, 0, true);
      std::vector<char> s(n);
      for (int v = 0; v < n; ++v) s[v] = !b[v];
      r.cut = make_cut(d, s);
    }
    return r;
  }
  long long best = FlowNetwork::kInf;
  std::vector<char> best_side;
  for (int v = 1; v < n; ++v) {
    for (int dir = 0; dir < 2; ++dir) {
      int s = dir ? v : 0, t = dir ? 0 : v;
      PairFlow pf = unit_flow(d, s, t, best);
      if (pf.value < best) {
        best = pf.value;
        best_side = pf.source_side;
      }
    }
  }
  r.lambda = static_cast<int>(best);
  r.cut = make_cut(d, best_side);
  return r;
}

bool is_k_arc_strong(const Digraph& d, int k) {
  if (k <= 0) return true;
  const int n = d.n();
  if (n < 2) return false;
  if (!is_strong(d)) return false;
  if (k == 1) return true;
  for (int v = 0; v < n; ++v)
    if (d.out_degree(v) < k || d.in_degree(v) < k) return false;
  for (int v = 1; v < n; ++v) {
    if (unit_flow(d, 0, v, k).value < k) return false;
    if (unit_flow(d, v, 0, k).value < k) return false;
  }
  return true;
}

PathsOrCut arc_disjoint_paths(const Digraph& d, int x, int y, int k) {
  if (x < 0 || y < 0 || x >= d.n() || y >= d.n()) throw InvalidParameter("vertex out of range");
  if (x == y) throw InvalidParameter("arc_disjoint_paths needs x != y");
  if (k < 0) throw InvalidParameter("k must be non-negative");
  PathsOrCut r;
  if (k == 0) return r;
  FlowNetwork net(d.n());
  ArcSet arcs = d.arcs();
  std::vector<int> ids;
  for (Arc a : arcs) ids.push_back(net.add_edge(a.tail, a.head, 1));
  long long f = net.max_flow(x, y, k);
  if (f < k) {
    r.cut = make_cut(d, net.residual_reachable(x));
    return r;
  }
  // peel paths off the flow, lowest arc first, shortcutting any loop
  std::vector<std::vector<int>> out(d.n());
  for (std::size_t i = 0; i < arcs.size(); ++i)
    if (net.flow(ids[i]) > 0) out[arcs[i].tail].push_back(arcs[i].head);
  for (auto& o : out) std::reverse(o.begin(), o.end());
  for (int p = 0; p < k; ++p) {
    std::vector<int> path{x};
    std::vector<int> pos(d.n(), -1);
    pos[x] = 0;
    int v = x;
    while (v != y) {
      int w = out[v].back();
      out[v].pop_back();
      if (pos[w] >= 0) {
        for (std::size_t i = pos[w] + 1; i < path.size(); ++i) pos[path[i]] = -1;
        path.resize(pos[w] + 1);
      } else {
        pos[w] = static_cast<int>(path.size());
        path.push_back(w);
      }
      v = w;
    }
    r.paths.push_back(std::move(path));
  }
  return r;
}

}  // namespace eulertrail
