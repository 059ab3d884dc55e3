#include "eulertrail/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace eulertrail {

int oracle_limit_override() {
  const char* s = std::getenv("EULERTRAIL_ORACLE_LIMIT");
  if (!s || !*s) return -1;
  char* end = nullptr;
  long v = std::strtol(s, &end, 10);
  if (end == s || v < 0) return -1;
  return static_cast<int>(v);
}

namespace {

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[a] = b;
    return true;
  }
};

bool weakly_connected(int n, const std::vector<Arc>& arcs) {
  if (n <= 1) return true;
  Dsu u(n);
  int comps = n;
  for (Arc a : arcs) comps -= u.unite(a.tail, a.head);
  return comps == 1;
}

class Search {
 public:
  Search(const Digraph& d, const OracleQuery& q) : d_(d), q_(q), n_(d.n()) {
    demand_ = q.demand.empty() ? std::vector<int>(n_, 0) : q.demand;
    if (static_cast<int>(demand_.size()) != n_) throw InvalidParameter("oracle: demand size mismatch");
    for (Arc a : q.must_contain)
      if (!d.has(a)) throw InvalidParameter("oracle: must_contain arc not in digraph");
    for (Arc a : q.must_avoid)
      if (!d.has(a)) throw InvalidParameter("oracle: must_avoid arc not in digraph");
    for (Arc a : q.must_contain)
      if (std::binary_search(q.must_avoid.begin(), q.must_avoid.end(), a)) impossible_ = true;
    diff_.assign(n_, 0);
    deg_.assign(n_, 0);
    for (Arc a : d.arcs()) {
      if (std::binary_search(q.must_contain.begin(), q.must_contain.end(), a)) {
        chosen_.push_back(a);
        add(a, +1);
      } else if (!std::binary_search(q.must_avoid.begin(), q.must_avoid.end(), a)) {
        free_.push_back(a);
      }
    }
  }

  std::vector<ArcSet> run() {
    if (impossible_) return {};
    const int free = static_cast<int>(free_.size());
    int lim = oracle_limit_override();
    int max_order = lim >= 0 ? std::max(lim, kDfsOrder) : kDfsOrder;
    if (free <= kSweepArcs) sweep();
    else if (n_ <= max_order) {
      rem_out_.assign(n_, 0);
      rem_in_.assign(n_, 0);
      for (Arc a : free_) {
        ++rem_out_[a.tail];
        ++rem_in_[a.head];
      }
      dfs(0);
    } else {
      throw SizeError("oracle: " + std::to_string(free) + " free arcs on " + std::to_string(n_) +
                      " vertices is above the search guard");
    }
    return std::move(found_);
  }

 private:
  void add(Arc a, int s) {
    diff_[a.tail] += s;
    diff_[a.head] -= s;
    deg_[a.tail] += s;
    deg_[a.head] += s;
  }

  bool done() const { return q_.limit >= 0 && static_cast<long long>(found_.size()) >= q_.limit; }

  bool accept(const std::vector<Arc>& arcs) const {
    for (int v = 0; v < n_; ++v) {
      if (diff_[v] != demand_[v]) return false;
      if (q_.positive_degree && (n_ > 1 || !q_.lone_vertex_ok) && deg_[v] == 0) return false;
    }
    if (q_.connected && !weakly_connected(n_, arcs)) return false;
    return true;
  }

  void emit(const std::vector<Arc>& arcs) { found_.push_back(make_arcset(arcs)); }

  void sweep() {
    const int f = static_cast<int>(free_.size());
    std::vector<char> on(f, 0);
    auto current = [&] {
      std::vector<Arc> cur = chosen_;
      for (int i = 0; i < f; ++i)
        if (on[i]) cur.push_back(free_[i]);
      return cur;
    };
    // gray code order: one flip per step
    int bad = 0;
    for (int v = 0; v < n_; ++v) bad += diff_[v] != demand_[v];
    const unsigned long long total = 1ULL << f;
    for (unsigned long long i = 0; i < total && !done(); ++i) {
      if (i > 0) {
        int b = __builtin_ctzll(i);
        Arc a = free_[b];
        int s = on[b] ? -1 : +1;
        on[b] ^= 1;
        bad -= (diff_[a.tail] != demand_[a.tail]) + (diff_[a.head] != demand_[a.head]);
        add(a, s);
        bad += (diff_[a.tail] != demand_[a.tail]) + (diff_[a.head] != demand_[a.head]);
      }
      if (bad == 0) {
        auto cur = current();
        if (accept(cur)) emit(cur);
      }
    }
  }

  bool feasible(int v) const {
    int need = demand_[v] - diff_[v];
    if (need < -rem_in_[v] || need > rem_out_[v]) return false;
    if (q_.positive_degree && (n_ > 1 || !q_.lone_vertex_ok) && deg_[v] + rem_out_[v] + rem_in_[v] == 0)
      return false;
    return true;
  }

  void dfs(std::size_t k) {
    if (done()) return;
    if (k == free_.size()) {
      if (accept(chosen_)) emit(chosen_);
      return;
    }
    Arc a = free_[k];
    --rem_out_[a.tail];
    --rem_in_[a.head];
    // take it
    add(a, +1);
    chosen_.push_back(a);
    if (feasible(a.tail) && feasible(a.head)) dfs(k + 1);
    chosen_.pop_back();
    add(a, -1);
    // leave it
    if (feasible(a.tail) && feasible(a.head)) dfs(k + 1);
    ++rem_out_[a.tail];
    ++rem_in_[a.head];
  }

  const Digraph& d_;
  const OracleQuery& q_;
  int n_;
  bool impossible_ = false;
  std::vector<int> demand_, diff_, deg_, rem_out_, rem_in_;
  std::vector<Arc> free_, chosen_;
  std::vector<ArcSet> found_;
};

}  // namespace

std::vector<ArcSet> oracle_search(const Digraph& d, const OracleQuery& q) {
  OracleQuery qq = q;
  qq.must_contain = make_arcset(q.must_contain);
  qq.must_avoid = make_arcset(q.must_avoid);
  return Search(d, qq).run();
}

std::vector<ArcSet> enumerate_spanning_eulerian(const Digraph& d, const ArcSet& must_contain,
                                                const ArcSet& must_avoid, long long limit) {
  OracleQuery q;
  q.must_contain = must_contain;
  q.must_avoid = must_avoid;
  q.limit = limit;
  return oracle_search(d, q);
}

bool oracle_has_spanning_eulerian(const Digraph& d, const ArcSet& must_contain,
                                  const ArcSet& must_avoid) {
  return !enumerate_spanning_eulerian(d, must_contain, must_avoid, 1).empty();
}

bool oracle_eulerian_factor(const Digraph& d, const ArcSet& avoid) {
  OracleQuery q;
  q.must_avoid = avoid;
  q.connected = false;
  q.lone_vertex_ok = false;
  q.limit = 1;
  return !oracle_search(d, q).empty();
}

bool oracle_spanning_trail_exists(const Digraph& d, int x, int y, const ArcSet& must_avoid) {
  if (x == y) throw InvalidParameter("oracle_spanning_trail_exists needs x != y");
  OracleQuery q;
  q.demand.assign(d.n(), 0);
  q.demand[x] = 1;
  q.demand[y] = -1;
  q.must_avoid = must_avoid;
  q.limit = 1;
  return !oracle_search(d, q).empty();
}

namespace {

int guard(int n, int def, const char* what) {
  int lim = oracle_limit_override();
  int cap = lim >= 0 ? lim : def;
  if (n < 0 || n > cap)
    throw SizeError(std::string(what) + ": order " + std::to_string(n) + " above guard " +
                    std::to_string(cap));
  return n;
}

}  // namespace

void for_each_tournament(int n, const std::function<void(const Digraph&)>& fn) {
  guard(n, kTournamentOrder, "enumerate_all_tournaments");
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
  const unsigned long long total = 1ULL << pairs.size();
  for (unsigned long long mask = 0; mask < total; ++mask) {
    Digraph d(n);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      auto [u, v] = pairs[i];
      if (mask >> i & 1) d.add_arc(v, u);
      else d.add_arc(u, v);
    }
    fn(d);
  }
}

void for_each_semicomplete(int n, const std::function<void(const Digraph&)>& fn) {
  guard(n, kSemicompleteOrder, "enumerate_all_semicomplete");
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
  unsigned long long total = 1;
  for (std::size_t i = 0; i < pairs.size(); ++i) total *= 3;
  for (unsigned long long code = 0; code < total; ++code) {
    Digraph d(n);
    unsigned long long c = code;
    for (auto [u, v] : pairs) {
      int digit = static_cast<int>(c % 3);
      c /= 3;
      if (digit != 1) d.add_arc(u, v);
      if (digit != 0) d.add_arc(v, u);
    }
    fn(d);
  }
}

std::vector<Digraph> enumerate_all_tournaments(int n) {
  std::vector<Digraph> out;
  for_each_tournament(n, [&](const Digraph& d) { out.push_back(d); });
  return out;
}

std::vector<Digraph> enumerate_all_semicomplete(int n) {
  std::vector<Digraph> out;
  for_each_semicomplete(n, [&](const Digraph& d) { out.push_back(d); });
  return out;
}

namespace {

bool balanced_cover(const Digraph& d, const ArcSet& arcs, bool need_connected) {
  // a factor needs an arc at every vertex, so one vertex never has one
  if (!need_connected && d.n() == 1) return false;
  const int n = d.n();
  std::vector<int> diff(n, 0), deg(n, 0);
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    Arc a = arcs[i];
    if (a.tail < 0 || a.head < 0 || a.tail >= n || a.head >= n || !d.has(a)) return false;
    if (i > 0 && !(arcs[i - 1] < a)) return false;
    ++diff[a.tail];
    --diff[a.head];
    ++deg[a.tail];
    ++deg[a.head];
  }
  for (int v = 0; v < n; ++v) {
    if (diff[v] != 0) return false;
    if (n > 1 && deg[v] == 0) return false;
  }
  return !need_connected || weakly_connected(n, arcs);
}

}  // namespace

bool oracle_is_spanning_eulerian(const Digraph& d, const ArcSet& arcs) { return balanced_cover(d, arcs, true); }

bool oracle_is_eulerian_factor(const Digraph& d, const ArcSet& arcs) { return balanced_cover(d, arcs, false); }

bool oracle_strong(const Digraph& d) {
  const int n = d.n();
  // transitive closure, kept deliberately naive
  std::vector<std::vector<char>> r(n, std::vector<char>(n, 0));
  for (int u = 0; u < n; ++u) {
    r[u][u] = 1;
    for (int v = 0; v < n; ++v)
      if (d.has(u, v)) r[u][v] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (r[i][k])
        for (int j = 0; j < n; ++j)
          if (r[k][j]) r[i][j] = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!r[i][j]) return false;
  return true;
}

}  // namespace eulertrail
