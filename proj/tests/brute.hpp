#pragma once

// Definition-level checks written without the library's algorithms. Only
// Digraph storage and arc listing are used.

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "eulertrail/core.hpp"

namespace brute {

using eulertrail::Arc;
using eulertrail::ArcSet;
using eulertrail::Digraph;

inline std::vector<std::vector<char>> closure(const Digraph& d) {
  const int n = d.n();
  std::vector<std::vector<char>> r(n, std::vector<char>(n, 0));
  for (int u = 0; u < n; ++u) {
    r[u][u] = 1;
    for (int v = 0; v < n; ++v)
      if (u != v && d.has(u, v)) r[u][v] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (r[i][k])
        for (int j = 0; j < n; ++j)
          if (r[k][j]) r[i][j] = 1;
  return r;
}

inline bool strong(const Digraph& d) {
  auto r = closure(d);
  for (int i = 0; i < d.n(); ++i)
    for (int j = 0; j < d.n(); ++j)
      if (!r[i][j]) return false;
  return true;
}

inline ArcSet cut_arcs(const Digraph& d) {
  ArcSet out;
  for (Arc a : d.arcs()) {
    Digraph e = d;
    e.remove_arc(a);
    if (!strong(e)) out.push_back(a);
  }
  return out;
}

// smallest number of arcs whose removal breaks strongness (checked up to cap)
inline int lambda(const Digraph& d, int cap) {
  if (d.n() <= 1) return 0;
  if (!strong(d)) return 0;
  ArcSet arcs = d.arcs();
  const int m = static_cast<int>(arcs.size());
  std::function<bool(int, int, Digraph&)> breaks = [&](int from, int left, Digraph& e) {
    if (left == 0) return !strong(e);
    for (int i = from; i < m; ++i) {
      e.remove_arc(arcs[i]);
      bool b = breaks(i + 1, left - 1, e);
      e.add_arc(arcs[i]);
      if (b) return true;
    }
    return false;
  };
  for (int k = 1; k <= cap; ++k) {
    Digraph e = d;
    if (breaks(0, k, e)) return k;
  }
  return cap + 1;
}

// every vertex balanced; positive degree if asked; weakly connected over all
// vertices if asked
inline bool eulerian_shape(int n, const ArcSet& s, bool connected, bool positive) {
  std::vector<int> out(n, 0), in(n, 0);
  std::vector<int> parent(n);
  for (int v = 0; v < n; ++v) parent[v] = v;
  std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
  for (Arc a : s) {
    ++out[a.tail];
    ++in[a.head];
    parent[find(a.tail)] = find(a.head);
  }
  for (int v = 0; v < n; ++v) {
    if (out[v] != in[v]) return false;
    if (positive && n > 1 && out[v] == 0) return false;
  }
  if (connected)
    for (int v = 1; v < n; ++v)
      if (find(v) != find(0)) return false;
  return true;
}

inline bool contains(const ArcSet& s, Arc a) {
  for (Arc b : s)
    if (b == a) return true;
  return false;
}

// plain subset enumeration; keep m small
inline bool any_subset(const Digraph& d, const std::function<bool(const ArcSet&)>& ok) {
  ArcSet arcs = d.arcs();
  const int m = static_cast<int>(arcs.size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    ArcSet s;
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1) s.push_back(arcs[i]);
    if (ok(s)) return true;
  }
  return false;
}

inline bool spanning_eulerian_exists(const Digraph& d, const ArcSet& contain, const ArcSet& avoid) {
  return any_subset(d, [&](const ArcSet& s) {
    for (Arc a : contain)
      if (!contains(s, a)) return false;
    for (Arc a : avoid)
      if (contains(s, a)) return false;
    return eulerian_shape(d.n(), s, true, true);
  });
}

inline bool eulerian_factor_exists(const Digraph& d, const ArcSet& avoid) {
  return any_subset(d, [&](const ArcSet& s) {
    for (Arc a : avoid)
      if (contains(s, a)) return false;
    return eulerian_shape(d.n(), s, false, true);
  });
}

// spanning (x,y)-trail by DFS over arc-distinct walks
inline bool trail_exists(const Digraph& d, int x, int y) {
  const int n = d.n();
  ArcSet arcs = d.arcs();
  std::vector<char> used(arcs.size(), 0);
  std::vector<int> seen(n, 0);
  std::function<bool(int)> go = [&](int v) {
    if (v == y) {
      bool all = true;
      for (int w = 0; w < n; ++w) all = all && seen[w] > 0;
      if (all) return true;
    }
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      if (used[i] || arcs[i].tail != v) continue;
      used[i] = 1;
      ++seen[arcs[i].head];
      bool ok = go(arcs[i].head);
      --seen[arcs[i].head];
      used[i] = 0;
      if (ok) return true;
    }
    return false;
  };
  seen[x] = 1;
  return go(x);
}

// Parts laid out left to right; part i gets sizes[i] consecutive ids and is a
// complete digraph, so no arc inside a part is a cut-arc. Between parts every
// pair gets one forward arc, except the listed backward arcs which replace
// their forward twin.
struct Layered {
  Digraph d;
  std::vector<std::vector<int>> parts;
  int at(int part, int k) const { return parts[part - 1][k]; }  // 1-based part
};

inline Layered layered(const std::vector<int>& sizes,
                       const std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>>& back) {
  Layered l;
  int next = 0;
  for (int s : sizes) {
    std::vector<int> p;
    for (int k = 0; k < s; ++k) p.push_back(next++);
    l.parts.push_back(p);
  }
  l.d = Digraph(next);
  for (const auto& p : l.parts)
    for (int u : p)
      for (int v : p)
        if (u != v) l.d.add_arc(u, v);
  std::vector<Arc> backward;
  for (const auto& [from, to] : back) backward.push_back({l.at(from.first, from.second), l.at(to.first, to.second)});
  for (std::size_t i = 0; i < l.parts.size(); ++i)
    for (std::size_t j = i + 1; j < l.parts.size(); ++j)
      for (int u : l.parts[i])
        for (int v : l.parts[j]) {
          bool rev = false;
          for (Arc b : backward) rev = rev || (b.tail == v && b.head == u);
          if (rev) l.d.add_arc(v, u);
          else l.d.add_arc(u, v);
        }
  return l;
}

}  // namespace brute
