#include "eulertrail/factor.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "eulertrail/flow.hpp"
#include "eulertrail/hamilton.hpp"
#include "eulertrail/oracle.hpp"

namespace eulertrail {

namespace {

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

// largest order the avoidance pipeline hands to the exhaustive search
constexpr int kAvoidOracleOrder = 8;

}  // namespace

std::vector<std::vector<int>> arc_components(int n, const ArcSet& arcs) {
  Dsu u(n);
  for (Arc a : arcs) u.unite(a.tail, a.head);
  std::vector<int> slot(n, -1);
  std::vector<std::vector<int>> out;
  for (int v = 0; v < n; ++v) {
    int r = u.find(v);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[r]].push_back(v);
  }
  return out;
}

EulerianFactor make_factor(int n, ArcSet arcs) {
  EulerianFactor f;
  f.arcs = make_arcset(std::move(arcs));
  f.components = arc_components(n, f.arcs);
  return f;
}

long long arcs_between(const Digraph& d, const std::vector<int>& from, const std::vector<int>& to) {
  long long c = 0;
  for (int u : from)
    for (int v : to)
      if (u != v && d.has(u, v)) ++c;
  return c;
}

FactorResult eulerian_factor(const Digraph& d, const ArcSet& avoid) {
  require_subset(d, avoid, "eulerian_factor");
  const Digraph dp = d.without(avoid);
  const int n = d.n();
  FactorResult res;
  if (n == 0) {
    res.factor = EulerianFactor{};
    return res;
  }
  // v- = v, v+ = n + v; lower bound 1 on v-v+ moved onto s and t
  const int s = 2 * n, t = 2 * n + 1;
  FlowNetwork net(2 * n + 2);
  for (int v = 0; v < n; ++v) {
    net.add_edge(v, n + v, n - 1);
    net.add_edge(s, n + v, 1);
    net.add_edge(v, t, 1);
  }
  std::vector<std::pair<int, Arc>> arc_edges;
  for (Arc a : dp.arcs()) arc_edges.push_back({net.add_edge(n + a.tail, a.head, 1), a});
  long long f = net.max_flow(s, t);
  if (f == n) {
    std::vector<Arc> chosen;
    for (auto [id, a] : arc_edges)
      if (net.flow(id) > 0) chosen.push_back(a);
    res.factor = make_factor(n, std::move(chosen));
    return res;
  }

  // min cut A: both halves in A -> R2, both out -> R1, only v+ in A -> Y
  auto in_a = net.residual_reachable(s);
  std::vector<int> where(n);  // 0 = R1, 1 = R2, 2 = Y
  for (int v = 0; v < n; ++v) {
    bool minus = in_a[v], plus = in_a[n + v];
    if (minus && !plus) throw Error("eulerian_factor: cut crosses a split arc");
    where[v] = minus ? 1 : (plus ? 2 : 0);
  }
  auto count_into = [&](int y, int cls) {
    int c = 0;
    for (int w = 0; w < n; ++w)
      if (w != y && where[w] == cls && dp.has(w, y)) ++c;
    return c;
  };
  auto count_out_to = [&](int y, int cls) {
    int c = 0;
    for (int w = 0; w < n; ++w)
      if (w != y && where[w] == cls && dp.has(y, w)) ++c;
    return c;
  };
  // shrink Y: anything fed from R2 or Y goes to R2, then anything feeding R1 goes to R1
  for (bool moved = true; moved;) {
    moved = false;
    for (int y = 0; y < n; ++y)
      if (where[y] == 2 && (count_into(y, 1) > 0 || count_into(y, 2) > 0)) {
        where[y] = 1;
        moved = true;
      }
  }
  for (bool moved = true; moved;) {
    moved = false;
    for (int y = 0; y < n; ++y)
      if (where[y] == 2 && count_out_to(y, 0) > 0) {
        where[y] = 0;
        moved = true;
      }
  }
  ObstructionPartition p;
  for (int v = 0; v < n; ++v) (where[v] == 0 ? p.r1 : where[v] == 1 ? p.r2 : p.y).push_back(v);
  if (!validate_obstruction(d, p, avoid)) throw Error("eulerian_factor: extracted partition is not an obstruction");
  res.obstruction = std::move(p);
  return res;
}

bool validate_factor(const Digraph& d, const EulerianFactor& f, const ArcSet& avoid) {
  const int n = d.n();
  std::vector<int> out(n, 0), in(n, 0);
  for (std::size_t i = 0; i < f.arcs.size(); ++i) {
    Arc a = f.arcs[i];
    if (a.tail < 0 || a.head < 0 || a.tail >= n || a.head >= n || !d.has(a)) return false;
    if (i > 0 && !(f.arcs[i - 1] < a)) return false;
    if (arcset_contains(avoid, a)) return false;
    ++out[a.tail];
    ++in[a.head];
  }
  for (int v = 0; v < n; ++v)
    if (out[v] != in[v] || out[v] == 0) return false;
  return f.components == arc_components(n, f.arcs);
}

bool validate_obstruction(const Digraph& d, const ObstructionPartition& p, const ArcSet& avoid) {
  const int n = d.n();
  std::vector<int> seen(n, 0);
  for (const auto* part : {&p.r1, &p.r2, &p.y})
    for (int v : *part) {
      if (v < 0 || v >= n || seen[v]) return false;
      seen[v] = 1;
    }
  if (std::count(seen.begin(), seen.end(), 1) != n) return false;
  const Digraph dp = d.without(avoid);
  if (arcs_between(dp, p.y, p.y) != 0) return false;
  if (arcs_between(dp, p.r2, p.y) != 0) return false;
  if (arcs_between(dp, p.y, p.r1) != 0) return false;
  return arcs_between(dp, p.r2, p.r1) < static_cast<long long>(p.y.size());
}

bool factor_exists_guarantee(const Digraph& d, int k) {
  if (k < 0) throw InvalidParameter("factor_exists_guarantee: k must be non-negative");
  return is_k_arc_strong(d, k + 1);
}

bool MergeReport::mergeable() const {
  return std::any_of(patterns.begin(), patterns.end(), [](const MergePattern& p) { return !p.add.empty(); });
}

MergeReport check_merge_obstructions(const Digraph& d, const ArcSet& h1, const ArcSet& h2) {
  const int n = d.n();
  std::vector<int> side(n, 0);
  for (Arc a : h1) side[a.tail] = side[a.head] = 1;
  for (Arc a : h2) {
    if (side[a.tail] == 1 || side[a.head] == 1)
      throw InvalidParameter("check_merge_obstructions: components share a vertex");
    side[a.tail] = side[a.head] = 2;
  }
  std::vector<int> v1, v2;
  for (int v = 0; v < n; ++v) {
    if (side[v] == 1) v1.push_back(v);
    if (side[v] == 2) v2.push_back(v);
  }
  MergeReport rep;
  // (a)
  for (int u : v1)
    for (int v : v2)
      if (d.has(u, v) && d.has(v, u)) rep.patterns.push_back({'a', {u, v}, {}, make_arcset({{u, v}, {v, u}})});
  // (b)
  for (int i = 0; i < 2; ++i) {
    const ArcSet& hi = i == 0 ? h1 : h2;
    const auto& vj = i == 0 ? v2 : v1;
    for (Arc a : hi)
      for (int x : vj)
        if (d.has(a.tail, x) && d.has(x, a.head))
          rep.patterns.push_back({'b', {a.tail, a.head, x}, {a}, make_arcset({{a.tail, x}, {x, a.head}})});
  }
  // (c)
  for (Arc a : h1)
    for (Arc b : h2)
      if (d.has(a.tail, b.head) && d.has(b.tail, a.head))
        rep.patterns.push_back({'c', {a.tail, a.head, b.tail, b.head}, make_arcset({a, b}),
                                make_arcset({{a.tail, b.head}, {b.tail, a.head}})});
  // (d) and (e): universal or hypouniversal vertices that are mixed
  for (int i = 0; i < 2; ++i) {
    const auto& vi = i == 0 ? v1 : v2;
    const auto& vj = i == 0 ? v2 : v1;
    const ArcSet& hj = i == 0 ? h2 : h1;
    for (int x : vi) {
      std::vector<int> missing;
      bool to = false, from = false;
      for (int w : vj) {
        if (!d.has(x, w) && !d.has(w, x)) missing.push_back(w);
        to = to || d.has(x, w);
        from = from || d.has(w, x);
      }
      if (!to || !from || missing.size() > 1) continue;
      char rule = missing.empty() ? 'd' : 'e';
      MergePattern found;
      bool ok = false;
      for (Arc a : hj)
        if (d.has(a.tail, x) && d.has(x, a.head)) {
          found = {rule, {x, a.tail, a.head}, {a}, make_arcset({{a.tail, x}, {x, a.head}})};
          ok = true;
          break;
        }
      if (!ok)
        for (int w : vj)
          if (d.has(x, w) && d.has(w, x)) {
            found = {rule, {x, w}, {}, make_arcset({{x, w}, {w, x}})};
            ok = true;
            break;
          }
      if (!ok && rule == 'e') {
        // forced shape: y^- x and x y^+ around the one non-neighbour y
        int y = missing.front();
        found = {rule, {x, y}, {}, {}};
        for (Arc a : hj) {
          if (a.head == y && d.has(a.tail, x)) found.vertices.push_back(a.tail);
          if (a.tail == y && d.has(x, a.head)) found.vertices.push_back(a.head);
        }
        ok = true;
      }
      if (ok) rep.patterns.push_back(std::move(found));
    }
  }
  return rep;
}

const char* merge_rule_name(MergeRule r) {
  switch (r) {
    case MergeRule::cycle: return "cycle";
    case MergeRule::two_cycle: return "2-cycle";
    case MergeRule::path_b: return "path";
    case MergeRule::cross_c: return "cross";
    case MergeRule::three_cycle: return "3-cycle";
    case MergeRule::exchange: return "exchange";
  }
  return "?";
}

namespace {

class Merger {
 public:
  Merger(const Digraph& dp, ArcSet arcs) : d_(dp), n_(dp.n()), in_h_(static_cast<std::size_t>(n_) * n_, 0) {
    for (Arc a : arcs) in_h_[idx(a)] = 1;
    refresh();
  }

  int components() const { return comps_; }

  ArcSet arcs() const {
    std::vector<Arc> r;
    for (int u = 0; u < n_; ++u)
      for (int v = 0; v < n_; ++v)
        if (in_h_[idx({u, v})]) r.push_back({u, v});
    return r;
  }

  // one successful rewrite, or nullopt when nothing applies
  std::optional<MergeRule> step() {
    if (auto r = try_cycle()) return r;
    if (try_detour()) return MergeRule::path_b;
    if (try_cross()) return MergeRule::cross_c;
    if (try_exchange()) return MergeRule::exchange;
    return std::nullopt;
  }

 private:
  std::size_t idx(Arc a) const { return static_cast<std::size_t>(a.tail) * n_ + a.head; }
  bool free_arc(int u, int v) const { return u != v && d_.has(u, v) && !in_h_[idx({u, v})]; }

  void refresh() {
    Dsu u(n_);
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        if (in_h_[idx({a, b})]) u.unite(a, b);
    comp_.assign(n_, 0);
    comps_ = 0;
    std::vector<int> slot(n_, -1);
    for (int v = 0; v < n_; ++v) {
      int r = u.find(v);
      if (slot[r] < 0) slot[r] = comps_++;
      comp_[v] = slot[r];
    }
  }

  // apply if the result is a factor with fewer components; otherwise roll back
  bool apply(const std::vector<Arc>& remove, const std::vector<Arc>& add) {
    for (Arc a : remove)
      if (!in_h_[idx(a)]) return false;
    for (Arc a : add)
      if (!free_arc(a.tail, a.head)) return false;
    auto saved = in_h_;
    for (Arc a : remove) in_h_[idx(a)] = 0;
    for (Arc a : add) {
      if (in_h_[idx(a)]) {
        in_h_ = saved;
        return false;
      }
      in_h_[idx(a)] = 1;
    }
    std::vector<int> out(n_, 0), in(n_, 0);
    for (int u = 0; u < n_; ++u)
      for (int v = 0; v < n_; ++v)
        if (in_h_[idx({u, v})]) {
          ++out[u];
          ++in[v];
        }
    bool ok = true;
    for (int v = 0; v < n_ && ok; ++v) ok = out[v] == in[v] && out[v] > 0;
    int before = comps_;
    if (ok) {
      refresh();
      ok = comps_ < before;
    }
    if (!ok) {
      in_h_ = saved;
      refresh();
    }
    return ok;
  }

  // shortest path over free arcs from s to t, optionally forced through another component
  std::vector<int> free_path(int s, int t, int avoid_comp) const {
    // state: vertex * 2 + (touched a component other than avoid_comp)
    const int states = 2 * n_;
    std::vector<int> par(states, -2);
    auto flag_of = [&](int v, int f) { return (avoid_comp >= 0 && comp_[v] != avoid_comp) ? 1 : f; };
    int start = 2 * s + flag_of(s, avoid_comp < 0 ? 1 : 0);
    par[start] = -1;
    std::queue<int> q;
    q.push(start);
    int goal = -1;
    while (!q.empty() && goal < 0) {
      int st = q.front();
      q.pop();
      int v = st / 2, f = st % 2;
      for (int w = 0; w < n_; ++w) {
        if (!free_arc(v, w)) continue;
        int ns = 2 * w + flag_of(w, f);
        if (par[ns] != -2) continue;
        par[ns] = st;
        if (w == t && ns % 2 == 1) {
          goal = ns;
          break;
        }
        if (w != t) q.push(ns);
      }
    }
    if (goal < 0) return {};
    std::vector<int> p;
    for (int st = goal; st != -1; st = par[st]) p.push_back(st / 2);
    std::reverse(p.begin(), p.end());
    return p;
  }

  static std::vector<Arc> walk_arcs(const std::vector<int>& p) {
    std::vector<Arc> r;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) r.push_back({p[i], p[i + 1]});
    return r;
  }

  static bool distinct(std::vector<Arc> a) {
    std::sort(a.begin(), a.end());
    return std::adjacent_find(a.begin(), a.end()) == a.end();
  }

  // a closed walk of free arcs through two components
  std::optional<MergeRule> try_cycle() {
    std::vector<int> best;
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) {
        if (!free_arc(a, b) || comp_[a] == comp_[b]) continue;
        auto p = free_path(b, a, -1);
        if (p.empty()) continue;
        if (best.empty() || p.size() < best.size()) {
          best = p;
          best.insert(best.begin(), a);
        }
      }
    if (best.empty()) return std::nullopt;
    auto add = walk_arcs(best);
    if (!apply({}, add)) return std::nullopt;
    if (add.size() == 2) return MergeRule::two_cycle;
    if (add.size() == 3) return MergeRule::three_cycle;
    return MergeRule::cycle;
  }

  // replace an arc uv of H by a free (u,v)-path through another component
  bool try_detour() {
    for (int u = 0; u < n_; ++u)
      for (int v = 0; v < n_; ++v) {
        if (!in_h_[idx({u, v})]) continue;
        auto p = free_path(u, v, comp_[u]);
        if (p.empty()) continue;
        auto add = walk_arcs(p);
        if (distinct(add) && apply({{u, v}}, add)) return true;
      }
    return false;
  }

  bool try_cross() {
    for (int u = 0; u < n_; ++u)
      for (int v = 0; v < n_; ++v) {
        if (!in_h_[idx({u, v})]) continue;
        for (int x = 0; x < n_; ++x)
          for (int y = 0; y < n_; ++y) {
            if (!in_h_[idx({x, y})] || comp_[x] == comp_[u]) continue;
            if (free_arc(u, y) && free_arc(x, v) && apply({{u, v}, {x, y}}, {{u, y}, {x, v}})) return true;
          }
      }
    return false;
  }

  // alternating cycle: free arcs forward, arcs of H backward
  bool try_exchange() {
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) {
        if (!free_arc(a, b) || comp_[a] == comp_[b]) continue;
        // BFS from b back to a; kind 0 = free arc forward, 1 = H arc reversed
        std::vector<int> par(n_, -2), kind(n_, -1);
        par[b] = -1;
        std::queue<int> q;
        q.push(b);
        while (!q.empty() && par[a] == -2) {
          int v = q.front();
          q.pop();
          for (int w = 0; w < n_; ++w) {
            if (par[w] != -2) continue;
            int k = free_arc(v, w) && !(v == a && w == b) ? 0 : (in_h_[idx({w, v})] ? 1 : -1);
            if (k < 0) continue;
            par[w] = v;
            kind[w] = k;
            q.push(w);
          }
        }
        if (par[a] == -2) continue;
        std::vector<Arc> remove, add{{a, b}};
        for (int w = a; w != b; w = par[w]) {
          int v = par[w];
          if (kind[w] == 0) add.push_back({v, w});
          else remove.push_back({w, v});
        }
        if (apply(remove, add)) return true;
      }
    return false;
  }

  const Digraph& d_;
  int n_;
  std::vector<std::uint8_t> in_h_;
  std::vector<int> comp_;
  int comps_ = 0;
};

}  // namespace

EulerianFactor merge_all(const Digraph& d, const EulerianFactor& factor, const ArcSet& avoid, MergeTrace* trace) {
  if (!validate_factor(d, factor, avoid)) throw PreconditionError("merge_all: not an eulerian factor of d minus avoid");
  const Digraph dp = d.without(avoid);
  Merger m(dp, factor.arcs);
  while (m.components() > 1) {
    auto r = m.step();
    if (!r) break;
    if (trace) trace->applied.push_back(*r);
  }
  return make_factor(d.n(), m.arcs());
}

bool is_star_set(const Digraph& d, const ArcSet& f) {
  require_subset(d, f, "is_star_set");
  const int n = d.n();
  // underlying simple graph; a 2-cycle counts as one edge
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (Arc a : f) adj[a.tail][a.head] = adj[a.head][a.tail] = 1;
  std::vector<int> deg(n, 0);
  Dsu u(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (adj[a][b]) {
        ++deg[a];
        ++deg[b];
        u.unite(a, b);
      }
  std::vector<int> verts(n, 0), edge_count(n, 0), centres(n, 0);
  for (int v = 0; v < n; ++v) {
    if (deg[v] == 0) continue;
    int r = u.find(v);
    ++verts[r];
    edge_count[r] += deg[v];
    if (deg[v] > 1) ++centres[r];
  }
  for (int r = 0; r < n; ++r) {
    if (verts[r] == 0) continue;
    if (edge_count[r] / 2 != verts[r] - 1) return false;  // not a tree
    if (centres[r] > 1) return false;
  }
  return true;
}

bool is_multipartite_remainder(const Digraph& d, const ArcSet& f) {
  require_subset(d, f, "is_multipartite_remainder");
  const Digraph dp = d.without(f);
  const int n = d.n();
  auto apart = [&](int a, int b) { return !dp.has(a, b) && !dp.has(b, a); };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b || !apart(a, b)) continue;
      for (int c = 0; c < n; ++c)
        if (c != a && c != b && apart(b, c) && !apart(a, c)) return false;
    }
  return true;
}

ArcSet multipartite_reduction_arcs(const Digraph& d, const ArcSet& f) {
  require_subset(d, f, "multipartite_reduction_arcs");
  const int n = d.n();
  Dsu u(n);
  std::vector<char> touched(n, 0);
  for (Arc a : f) {
    u.unite(a.tail, a.head);
    touched[a.tail] = touched[a.head] = 1;
  }
  std::vector<Arc> r;
  for (Arc a : d.arcs())
    if (touched[a.tail] && u.find(a.tail) == u.find(a.head)) r.push_back(a);
  return make_arcset(r);
}

const char* avoid_status_name(AvoidStatus s) {
  switch (s) {
    case AvoidStatus::found: return "found";
    case AvoidStatus::obstruction: return "obstruction";
    case AvoidStatus::unknown: return "unknown";
  }
  return "?";
}

namespace {

bool spanning_eulerian_arcs(const Digraph& d, const ArcSet& arcs) {
  const int n = d.n();
  std::vector<int> out(n, 0), in(n, 0);
  for (Arc a : arcs) {
    if (!d.has(a)) return false;
    ++out[a.tail];
    ++in[a.head];
  }
  for (int v = 0; v < n; ++v)
    if (out[v] != in[v] || (n > 1 && out[v] == 0)) return false;
  return arc_components(n, arcs).size() <= 1;
}

std::optional<ArcSet> factor_and_merge(const Digraph& d, const ArcSet& avoid) {
  auto fr = eulerian_factor(d, avoid);
  if (!fr.factor) return std::nullopt;
  auto merged = merge_all(d, *fr.factor, avoid);
  if (merged.components.size() != 1) return std::nullopt;
  return merged.arcs;
}

}  // namespace

std::optional<ArcSet> avoid_by_reduction(const Digraph& d, const ArcSet& f) {
  return factor_and_merge(d, multipartite_reduction_arcs(d, f));
}

AvoidResult spanning_eulerian_avoiding(const Digraph& d, const ArcSet& f_in) {
  if (!is_semicomplete(d)) throw PreconditionError("spanning_eulerian_avoiding: digraph is not semicomplete");
  ArcSet f = make_arcset(f_in);
  require_subset(d, f, "spanning_eulerian_avoiding");
  const int n = d.n();
  const int k = static_cast<int>(f.size());
  AvoidResult r;
  const Digraph dp = d.without(f);

  const int lambda = arc_connectivity(d).lambda;
  const bool reduction_regime = 4LL * (lambda - 1) >= static_cast<long long>(k + 1) * (k + 1);
  r.guaranteed = (lambda >= k + 1 && (k <= 3 || is_star_set(d, f))) || reduction_regime;

  if (!is_strong(dp)) {
    auto comps = strong_components(dp);
    std::vector<char> in_s(n, 0);
    for (int v : comps.back()) in_s[v] = 1;
    r.status = AvoidStatus::obstruction;
    r.cut = make_cut(dp, in_s);
    r.route = "not-strong";
    return r;
  }
  if (n == 1) {
    r.status = AvoidStatus::found;
    r.route = "trivial";
    return r;
  }
  if (is_semicomplete(dp)) {
    r.status = AvoidStatus::found;
    r.arcs = cycle_arcs(hamiltonian_cycle(dp));
    r.route = "hamiltonian";
    return r;
  }
  auto fr = eulerian_factor(d, f);
  if (!fr.factor) {
    r.status = AvoidStatus::obstruction;
    r.partition = fr.obstruction;
    r.route = "no-factor";
    return r;
  }
  auto merged = merge_all(d, *fr.factor, f);
  if (merged.components.size() == 1) {
    r.status = AvoidStatus::found;
    r.arcs = merged.arcs;
    r.route = "merge";
    return r;
  }
  if (reduction_regime) {
    if (auto a = avoid_by_reduction(d, f)) {
      r.status = AvoidStatus::found;
      r.arcs = *a;
      r.route = "multipartite";
      return r;
    }
  }
  int lim = oracle_limit_override();
  if (n <= std::max(kAvoidOracleOrder, lim)) {
    auto found = enumerate_spanning_eulerian(d, {}, f, 1);
    if (!found.empty()) {
      r.status = AvoidStatus::found;
      r.arcs = found.front();
      r.route = "oracle";
    } else {
      r.status = AvoidStatus::obstruction;
      r.route = "oracle";
    }
    return r;
  }
  r.status = AvoidStatus::unknown;
  r.route = is_multipartite_remainder(d, f) ? "multipartite-unconstructed" : "unmerged";
  return r;
}

bool validate_avoiding(const Digraph& d, const ArcSet& f, const AvoidResult& r) {
  const Digraph dp = d.without(f);
  switch (r.status) {
    case AvoidStatus::found:
      for (Arc a : r.arcs)
        if (arcset_contains(f, a)) return false;
      return spanning_eulerian_arcs(dp, r.arcs);
    case AvoidStatus::obstruction:
      if (r.cut) return validate_cut(dp, *r.cut) && r.cut->crossing.empty() && !r.cut->side_s.empty() &&
                        !r.cut->side_t.empty();
      if (r.partition) return validate_obstruction(d, *r.partition, f);
      return r.route == "oracle";
    case AvoidStatus::unknown:
      return true;
  }
  return false;
}

}  // namespace eulertrail
