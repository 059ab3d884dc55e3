#include "eulertrail/hamilton.hpp"

#include <algorithm>
#include <queue>

#include "eulertrail/connectivity.hpp"

namespace eulertrail {

namespace {

void require_semicomplete(const Digraph& d, const char* who) {
  if (!is_semicomplete(d)) throw PreconditionError(std::string(who) + ": digraph is not semicomplete");
}

std::vector<int> map_back(const std::vector<int>& local, const std::vector<int>& verts) {
  std::vector<int> r;
  r.reserve(local.size());
  for (int v : local) r.push_back(verts[v]);
  return r;
}

int local_index(const std::vector<int>& verts, int v) {
  return static_cast<int>(std::find(verts.begin(), verts.end(), v) - verts.begin());
}

// hamiltonian path of a strong semicomplete digraph starting at x (x may be -1)
// or ending at y
Path strong_path(const Digraph& d, int x, int y) {
  if (d.n() == 1) return {0};
  Cycle c = hamiltonian_cycle(d);
  if (x >= 0) return rotate_to(c, x);
  // y last: start right after y
  auto it = std::find(c.begin(), c.end(), y);
  std::size_t k = (it - c.begin() + 1) % c.size();
  return rotate_to(c, c[k]);
}

}  // namespace

ArcSet cycle_arcs(const Cycle& c) {
  std::vector<Arc> r;
  if (c.size() < 2) return {};
  for (std::size_t i = 0; i < c.size(); ++i) r.push_back({c[i], c[(i + 1) % c.size()]});
  return make_arcset(r);
}

ArcSet path_arcs(const Path& p) {
  std::vector<Arc> r;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) r.push_back({p[i], p[i + 1]});
  return make_arcset(r);
}

Cycle rotate_to(const Cycle& c, int v) {
  auto it = std::find(c.begin(), c.end(), v);
  if (it == c.end()) throw InvalidParameter("vertex not on cycle");
  Cycle r(it, c.end());
  r.insert(r.end(), c.begin(), it);
  return r;
}

std::vector<int> out_generators(const Digraph& d) {
  if (d.n() == 0) return {};
  return strong_components(d).front();
}

std::vector<int> in_generators(const Digraph& d) {
  if (d.n() == 0) return {};
  return strong_components(d).back();
}

Path hamiltonian_path(const Digraph& d) {
  require_semicomplete(d, "hamiltonian_path");
  if (d.n() < 1) throw PreconditionError("hamiltonian_path: empty digraph");
  Path p{0};
  for (int v = 1; v < d.n(); ++v) {
    if (d.has(v, p.front())) {
      p.insert(p.begin(), v);
    } else if (d.has(p.back(), v)) {
      p.push_back(v);
    } else {
      // p.front() -> v and v -> p.back(): some consecutive pair brackets v
      for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (d.has(p[i], v) && d.has(v, p[i + 1])) {
          p.insert(p.begin() + i + 1, v);
          break;
        }
    }
  }
  return p;
}

Cycle hamiltonian_cycle(const Digraph& d) {
  require_semicomplete(d, "hamiltonian_cycle");
  const int n = d.n();
  if (n == 0) throw PreconditionError("hamiltonian_cycle: empty digraph");
  if (!is_strong(d)) throw PreconditionError("hamiltonian_cycle: digraph is not strong");
  if (n == 1) return {0};
  // shortest cycle through 0
  std::vector<int> par(n, -1), dist(n, -1);
  std::queue<int> q;
  dist[0] = 0;
  q.push(0);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w = 0; w < n; ++w)
      if (d.has(v, w) && dist[w] < 0) {
        dist[w] = dist[v] + 1;
        par[w] = v;
        q.push(w);
      }
  }
  int last = -1;
  for (int w = 1; w < n; ++w)
    if (d.has(w, 0) && (last < 0 || dist[w] < dist[last])) last = w;
  Cycle c;
  for (int v = last; v != 0; v = par[v]) c.push_back(v);
  c.push_back(0);
  std::reverse(c.begin(), c.end());

  std::vector<char> on(n, 0);
  for (int v : c) on[v] = 1;
  while (static_cast<int>(c.size()) < n) {
    bool grew = false;
    for (int v = 0; v < n && !grew; ++v) {
      if (on[v]) continue;
      for (std::size_t i = 0; i < c.size(); ++i)
        if (d.has(c[i], v) && d.has(v, c[(i + 1) % c.size()])) {
          c.insert(c.begin() + i + 1, v);
          on[v] = 1;
          grew = true;
          break;
        }
    }
    if (grew) continue;
    // every outside vertex dominates the cycle (A) or is dominated by it (B)
    std::vector<int> in_a, in_b;
    for (int v = 0; v < n; ++v) {
      if (on[v]) continue;
      (d.has(v, c[0]) ? in_a : in_b).push_back(v);
    }
    int b = -1, a = -1;
    for (int bb : in_b) {
      for (int aa : in_a)
        if (d.has(bb, aa)) {
          b = bb;
          a = aa;
          break;
        }
      if (b >= 0) break;
    }
    if (b < 0) throw Error("hamiltonian_cycle: no bridging arc, digraph cannot be strong");
    // c0 b a c2 ... ; c1 drops out and becomes insertable
    on[c[1]] = 0;
    c[1] = b;
    c.insert(c.begin() + 2, a);
    on[a] = on[b] = 1;
  }
  return c;
}

Path hamiltonian_path_between(const Digraph& d, int x, std::optional<int> y) {
  require_semicomplete(d, "hamiltonian_path_between");
  const int n = d.n();
  if (x < 0 || x >= n || (y && (*y < 0 || *y >= n))) throw InvalidParameter("vertex out of range");
  auto comps = strong_components(d);
  const auto& first = comps.front();
  if (std::find(first.begin(), first.end(), x) == first.end())
    throw PreconditionError("hamiltonian_path_between: x is not an out-generator");
  if (y) {
    if (comps.size() == 1)
      throw PreconditionError("hamiltonian_path_between: digraph is strong, endpoints not guaranteed");
    const auto& lastc = comps.back();
    if (std::find(lastc.begin(), lastc.end(), *y) == lastc.end())
      throw PreconditionError("hamiltonian_path_between: y is not an in-generator");
  }
  Path out;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const auto& c = comps[i];
    Digraph h = d.induced(c);
    int lx = -1, ly = -1;
    if (i == 0) lx = local_index(c, x);
    else if (y && i + 1 == comps.size()) ly = local_index(c, *y);
    else lx = 0;
    Path local = strong_path(h, lx, ly);
    auto part = map_back(local, c);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

Cycle cycle_covering_complement(const Digraph& d, const std::vector<int>& f_vertices,
                                const ArcSet& f_arcs, int z) {
  require_semicomplete(d, "cycle_covering_complement");
  const int n = d.n();
  std::vector<char> in_f(n, 0);
  for (int v : f_vertices) in_f[v] = 1;
  for (Arc a : f_arcs) in_f[a.tail] = in_f[a.head] = 1;
  if (z < 0 || z >= n || !in_f[z]) throw PreconditionError("cycle_covering_complement: z is not in V(F)");
  Digraph rest = d.without(f_arcs);
  if (!is_strong(rest)) throw PreconditionError("cycle_covering_complement: D minus A(F) is not strong");

  std::vector<int> w;
  for (int v = 0; v < n; ++v)
    if (!in_f[v] || v == z) w.push_back(v);
  if (w.size() == 1) return {z};
  Digraph dp = d.induced(w);
  if (is_strong(dp)) return map_back(hamiltonian_cycle(dp), w);

  auto comps = strong_components(dp);
  std::vector<char> in_x(n, 0), in_y(n, 0);
  for (int v : comps.front()) in_x[w[v]] = 1;
  for (int v : comps.back()) in_y[w[v]] = 1;
  // shortest (Y,X)-path in D minus A(F)
  std::vector<int> par(n, -2);
  std::queue<int> q;
  for (int v = 0; v < n; ++v)
    if (in_y[v]) {
      par[v] = -1;
      q.push(v);
    }
  int t = -1;
  while (!q.empty() && t < 0) {
    int v = q.front();
    q.pop();
    for (int u = 0; u < n; ++u)
      if (rest.has(v, u) && par[u] == -2) {
        par[u] = v;
        if (in_x[u]) {
          t = u;
          break;
        }
        q.push(u);
      }
  }
  if (t < 0) throw Error("cycle_covering_complement: no (Y,X)-path");
  Path p;
  for (int v = t; v != -1; v = par[v]) p.push_back(v);
  std::reverse(p.begin(), p.end());
  int s = p.front();

  std::vector<char> interior(n, 0);
  for (std::size_t i = 1; i + 1 < p.size(); ++i) interior[p[i]] = 1;
  std::vector<int> w2;
  for (int v : w)
    if (!interior[v]) w2.push_back(v);
  Digraph dpp = d.induced(w2);
  Path qp = map_back(hamiltonian_path_between(dpp, local_index(w2, t), local_index(w2, s)), w2);
  Cycle c(p.begin(), p.end());
  c.insert(c.end(), qp.begin() + 1, qp.end() - 1);
  return c;
}

}  // namespace eulertrail
