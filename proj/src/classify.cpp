#include "eulertrail/classify.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <tuple>

#include "eulertrail/hamilton.hpp"
#include "eulertrail/oracle.hpp"
#include "eulertrail/trails.hpp"

namespace eulertrail {

const char* containment_name(ContainmentTag t) {
  switch (t) {
    case ContainmentTag::good: return "good";
    case ContainmentTag::regular_bad: return "regular-bad";
    case ContainmentTag::left_bad: return "left-bad";
    case ContainmentTag::right_bad: return "right-bad";
    case ContainmentTag::small_case: return "small-case";
  }
  return "?";
}

const char* unavoid_name(UnavoidTag t) {
  switch (t) {
    case UnavoidTag::avoidable: return "avoidable";
    case UnavoidTag::cut_arc: return "cut-arc";
    case UnavoidTag::regular_compulsory: return "regular-compulsory";
    case UnavoidTag::left_compulsory: return "left-compulsory";
    case UnavoidTag::right_compulsory: return "right-compulsory";
    case UnavoidTag::exceptional: return "exceptional";
  }
  return "?";
}

bool is_spanning_eulerian(const Digraph& d, const ArcSet& arcs) {
  const int n = d.n();
  std::vector<int> out(n, 0), in(n, 0);
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    Arc a = arcs[i];
    if (a.tail < 0 || a.head < 0 || a.tail >= n || a.head >= n || !d.has(a)) return false;
    if (i > 0 && !(arcs[i - 1] < a)) return false;
    ++out[a.tail];
    ++in[a.head];
  }
  for (int v = 0; v < n; ++v)
    if (out[v] != in[v] || (n > 1 && out[v] == 0)) return false;
  return arc_components(n, arcs).size() <= 1;
}

namespace {

void require_input(const Digraph& d, Arc a, const char* who) {
  if (a.tail < 0 || a.head < 0 || a.tail >= d.n() || a.head >= d.n() || !d.has(a))
    throw InvalidParameter(std::string(who) + ": arc not in digraph");
  if (!is_semicomplete(d)) throw PreconditionError(std::string(who) + ": digraph is not semicomplete");
  if (!is_strong(d)) throw PreconditionError(std::string(who) + ": digraph is not strong");
}

// D3: arcs xy, yz, zy, zx with a = zy
bool is_d3_bad_arc(const Digraph& d, Arc a) {
  if (d.n() != 3 || d.arc_count() != 4) return false;
  int z = a.tail, y = a.head, x = 3 - z - y;
  return d.has(x, y) && d.has(y, z) && d.has(z, y) && d.has(z, x);
}

// subsets of the remaining arcs; only for tiny digraphs
std::optional<ArcSet> small_search(const Digraph& d, Arc a) {
  ArcSet rest;
  for (Arc b : d.arcs())
    if (b != a) rest.push_back(b);
  if (rest.size() > 20) throw SizeError("small_search: too many arcs");
  const unsigned long long total = 1ULL << rest.size();
  for (unsigned long long mask = 0; mask < total; ++mask) {
    std::vector<Arc> pick{a};
    for (std::size_t i = 0; i < rest.size(); ++i)
      if (mask >> i & 1) pick.push_back(rest[i]);
    ArcSet s = make_arcset(pick);
    if (is_spanning_eulerian(d, s)) return s;
  }
  return std::nullopt;
}

// D<verts> plus `extra` fresh vertices numbered after them
Digraph grown(const Digraph& d, const std::vector<int>& verts, int extra) {
  Digraph h(static_cast<int>(verts.size()) + extra);
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = 0; j < verts.size(); ++j)
      if (i != j && d.has(verts[i], verts[j])) h.add_arc(static_cast<int>(i), static_cast<int>(j));
  return h;
}

int local(const std::vector<int>& verts, int v) {
  return static_cast<int>(std::find(verts.begin(), verts.end(), v) - verts.begin());
}

class WitnessBuilder {
 public:
  std::string how;
  int rejected = 0;  // step results that failed the check
  long budget = 4000;  // steps before giving up

  std::optional<ArcSet> build(const Digraph& d, Arc a, const Decomposition* given) {
    if (d.n() <= 4) return attempt(d, a, "search", [&] { return small_search(d, a); });
    Decomposition dec = given ? *given : nice_decomposition(d);
    switch (arc_tag(dec, a)) {
      case ArcTag::backward: return attempt(d, a, "backward-cycle", [&] { return backward_cycle(d, dec); });
      case ArcTag::flat: return attempt(d, a, "flat-trail", [&] { return flat(d, a); });
      case ArcTag::forward: return forward(d, dec, a);
    }
    return std::nullopt;
  }

 private:
  void note(const std::string& s) { how += how.empty() ? s : "/" + s; }

  std::optional<ArcSet> flat(const Digraph& d, Arc a) {
    try {
      Trail t = spanning_trail(d, a.head, a.tail);
      auto arcs = trail_arcs(t);
      arcs.push_back(a);
      return make_arcset(arcs);
    } catch (const Error&) {
      return std::nullopt;
    }
  }

  // hamiltonian cycle through every backward arc
  std::optional<ArcSet> backward_cycle(const Digraph& d, const Decomposition& dec) {
    try {
      auto ord = natural_backward_ordering(d, dec);
      const int p = dec.p(), r = ord.r();
      if (r == 0) return std::nullopt;
      std::vector<int> q1;
      // P_p ending at s_1
      {
        const auto& sp = dec.set(p);
        Path pp = hamiltonian_path_between(grown(d, sp, 0).reversed(), local(sp, ord.s(1)));
        std::reverse(pp.begin(), pp.end());
        for (int v : pp) q1.push_back(sp[v]);
      }
      for (int j = 1; j < r; ++j) {
        int t = ord.t(j), s = ord.s(j + 1);
        if (dec.ind[t] == dec.ind[s]) {
          const auto& si = dec.set(dec.ind[t]);
          auto seg = bfs_path(grown(d, si, 0), local(si, t), local(si, s));
          if (seg.empty()) return std::nullopt;
          for (int v : seg) q1.push_back(si[v]);
        } else {
          q1.push_back(t);
          q1.push_back(s);
        }
      }
      {
        const auto& s1 = dec.set(1);
        Path p1 = hamiltonian_path_between(grown(d, s1, 0), local(s1, ord.t(r)));
        for (int v : p1) q1.push_back(s1[v]);
      }
      std::vector<char> used(d.n(), 0);
      for (int v : q1) {
        if (used[v]) return std::nullopt;
        used[v] = 1;
      }
      int y = q1.front(), x = q1.back();
      std::vector<int> rest;
      for (int v = 0; v < d.n(); ++v)
        if (!used[v] || v == x || v == y) rest.push_back(v);
      Path q2{local(rest, x), local(rest, y)};
      if (rest.size() > 2) {
        // an (x,y)-path through 3+ vertices never uses xy
        Digraph dd = grown(d, rest, 0);
        dd.remove_arc(q2[1], q2[0]);
        dd.add_arc(q2[0], q2[1]);
        q2 = hamiltonian_path_between(dd, q2[0], q2[1]);
      }
      Cycle c = q1;
      for (std::size_t i = 1; i + 1 < q2.size(); ++i) c.push_back(rest[q2[i]]);
      return cycle_arcs(c);
    } catch (const Error&) {
      return std::nullopt;
    }
  }

  static std::vector<int> bfs_path(const Digraph& d, int s, int t) {
    std::vector<int> par(d.n(), -2);
    par[s] = -1;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : d.out_neighbours(v))
        if (par[w] == -2) {
          par[w] = v;
          q.push(w);
        }
    }
    if (par[t] == -2) return {};
    std::vector<int> p;
    for (int v = t; v != -1; v = par[v]) p.push_back(v);
    std::reverse(p.begin(), p.end());
    return p;
  }

  std::optional<ArcSet> forward(const Digraph& d, const Decomposition& dec, Arc a, bool first = true) {
    if (first) {
      if (auto w = attempt(d, a, "segments", [&] { return segments(d, dec, a); })) return w;
    }
    const int p = dec.p(), iu = dec.ind[a.tail], iv = dec.ind[a.head];
    const auto s1 = dec.set(1).size();
    if (iu >= 3 || (iu == 2 && s1 > 1)) {
      for (int c = iu; c >= 2; --c) {
        // D_R must stay smaller than D
        if (std::count_if(dec.ind.begin(), dec.ind.end(), [&](int i) { return i < c; }) < 2) break;
        if (auto w = attempt(d, a, "split", [&] { return split(d, dec, a, c); })) return w;
      }
    }
    // peel a singleton S_1 = {t_r}
    if (s1 == 1 && dec.set(1)[0] != a.tail) {
      if (auto w = attempt(d, a, "peel", [&] { return peel(d, dec, a); })) return w;
    }
    if (first && iv <= p - 1) {
      auto w = attempt(d, a, "mirror", [&]() -> std::optional<ArcSet> {
        auto rd = reverse_decomposition(dec);
        auto rw = forward(d.reversed(), rd, {a.head, a.tail}, false);
        if (!rw) return std::nullopt;
        return reverse_arcs(*rw);
      });
      if (w) return w;
    }
    if (iu == 1 && iv == p) return attempt(d, a, "wrap", [&] { return wrap(d, dec, a); });
    return std::nullopt;
  }

  // records the step name; rolls it back when the step fails or its result does not check out
  template <class F>
  std::optional<ArcSet> attempt(const Digraph& d, Arc a, const char* name, F&& f) {
    if (--budget < 0) return std::nullopt;
    const auto mark = how.size();
    note(name);
    std::optional<ArcSet> w;
    try {
      w = f();
    } catch (const Error&) {
      w.reset();
    }
    if (w && !(is_spanning_eulerian(d, *w) && arcset_contains(*w, a))) {
      ++rejected;
      w.reset();
    }
    if (!w) how.resize(mark);
    return w;
  }

  // Backward arcs plus forward-moving trails between them: t_j -> s_{j+1} for j < r and the
  // long pass t_r -> s_1. Parts are handed whole to one trail; uv sits inside one of them.
  std::optional<ArcSet> segments(const Digraph& d, const Decomposition& dec, Arc a) {
    auto ord = natural_backward_ordering(d, dec);
    const int p = dec.p(), r = ord.r();
    if (r == 0) return std::nullopt;
    struct Seg {
      int start, end, lo, hi;
    };
    std::vector<Seg> segs{{ord.t(r), ord.s(1), 1, p}};
    for (int j = 1; j < r; ++j) segs.push_back({ord.t(j), ord.s(j + 1), dec.ind[ord.t(j)], dec.ind[ord.s(j + 1)]});
    std::vector<int> own(p + 1, 0), pinned(p + 1, -1);
    for (int k = 1; k < static_cast<int>(segs.size()); ++k)
      for (int i = segs[k].lo; i <= segs[k].hi; ++i) own[i] = k;
    for (int k = 0; k < static_cast<int>(segs.size()); ++k) {
      pinned[dec.ind[segs[k].start]] = k;
      pinned[dec.ind[segs[k].end]] = k;
    }
    const int iu = dec.ind[a.tail], iv = dec.ind[a.head];
    const int ns = static_cast<int>(segs.size());
    for (int sigma = 0; sigma < ns; ++sigma) {
      if (segs[sigma].lo > iu || iv > segs[sigma].hi) continue;
      // a part at u or v pinned to another trail k: either uv's trail only touches it (mode 0)
      // or takes it whole and k only touches its own end there (mode 1)
      for (int mode = 0; mode < 4; ++mode) {
        auto o = own;
        std::vector<std::vector<int>> tv(ns, std::vector<int>(p + 1, -1));
        bool ok = true, used_mode = false;
        for (int e = 0; e < 2; ++e) {
          const int i = e == 0 ? iu : iv, x = e == 0 ? a.tail : a.head, k = pinned[i];
          if (k < 0 || k == sigma) {
            o[i] = sigma;
            continue;
          }
          used_mode = used_mode || (mode >> e & 1);
          if (!(mode >> e & 1)) {
            tv[sigma][i] = x;
            continue;
          }
          const int ks = segs[k].start, ke = segs[k].end;
          if (dec.ind[ks] == i && dec.ind[ke] == i && ks != ke) ok = false;
          o[i] = sigma;
          tv[k][i] = dec.ind[ks] == i ? ks : ke;
        }
        if (mode > 0 && !used_mode) continue;
        for (int i = iu + 1; i < iv && ok; ++i) {
          if (o[i] != sigma) continue;
          if (sigma != 0) {
            o[i] = 0;
            continue;
          }
          ok = false;
          for (int k = 1; k < ns; ++k)
            if (segs[k].lo <= i && i <= segs[k].hi) {
              o[i] = k;
              ok = true;
            }
        }
        if (!ok) continue;
        std::vector<Arc> out(ord.arcs.begin(), ord.arcs.end());
        for (int k = 0; k < ns && ok; ++k) {
          std::vector<int> parts, at;
          for (int i = 1; i <= p; ++i)
            if (o[i] == k || tv[k][i] >= 0) {
              parts.push_back(i);
              at.push_back(tv[k][i]);
            }
          auto t = segment_trail(d, dec, parts, at, segs[k].start, segs[k].end, k == sigma ? &a : nullptr);
          if (!t) ok = false;
          else out.insert(out.end(), t->begin(), t->end());
        }
        if (ok) {
          auto w = make_arcset(out);
          if (w.size() == out.size()) return w;
        }
      }
    }
    return std::nullopt;
  }

  // monotone trail start -> end through the given parts (increasing), each part spanned unless only touched at one vertex
  std::optional<std::vector<Arc>> segment_trail(const Digraph& d, const Decomposition& dec,
                                                const std::vector<int>& parts, const std::vector<int>& at,
                                                int start, int end, const Arc* jump) {
    const int m = static_cast<int>(parts.size());
    if (m == 0) return std::nullopt;
    struct Part {
      std::vector<int> verts;
      Cycle cyc;  // global ids, empty for a single vertex
      int fe = -1, fx = -1;
    };
    std::vector<Part> ps(m);
    for (int k = 0; k < m; ++k) {
      auto& pt = ps[k];
      pt.verts = dec.set(parts[k]);
      if (at[k] >= 0) pt.verts = {at[k]};
      if (pt.verts.size() > 1)
        for (int v : hamiltonian_cycle(grown(d, pt.verts, 0))) pt.cyc.push_back(pt.verts[v]);
      auto fix = [](int& slot, int v) {
        if (slot >= 0 && slot != v) return false;
        slot = v;
        return true;
      };
      bool ok = true;
      if (k == 0) ok = ok && fix(pt.fe, start);
      if (k == m - 1) ok = ok && fix(pt.fx, end);
      if (jump && parts[k] == dec.ind[jump->tail]) ok = ok && fix(pt.fx, jump->tail);
      if (jump && parts[k] == dec.ind[jump->head]) {
        ok = ok && fix(pt.fe, jump->head);
        if (k == 0 || parts[k - 1] != dec.ind[jump->tail]) ok = false;
      }
      if (!ok) return std::nullopt;
    }
    auto pred = [](const Part& pt, int e) {
      if (pt.cyc.empty()) return e;
      auto it = std::find(pt.cyc.begin(), pt.cyc.end(), e);
      return it == pt.cyc.begin() ? pt.cyc.back() : *(it - 1);
    };
    std::map<std::tuple<int, int, int>, std::optional<std::vector<Arc>>> cache;
    auto inner = [&](int k, int e, int x) -> const std::optional<std::vector<Arc>>& {
      auto key = std::make_tuple(k, e, x);
      auto it = cache.find(key);
      if (it != cache.end()) return it->second;
      const auto& pt = ps[k];
      std::optional<std::vector<Arc>> res;
      if (pt.cyc.empty()) {
        res = std::vector<Arc>{};
      } else {
        Cycle c = rotate_to(pt.cyc, e);
        auto arcs = cycle_arcs(c);
        if (x == e) {
          res = std::vector<Arc>(arcs.begin(), arcs.end());
        } else if (x == c.back()) {
          std::vector<Arc> v;
          for (std::size_t i = 0; i + 1 < c.size(); ++i) v.push_back({c[i], c[i + 1]});
          res = v;
        } else {
          try {
            auto tr = trail_arcs(spanning_trail(grown(d, pt.verts, 0), local(pt.verts, e), local(pt.verts, x)));
            std::vector<Arc> v;
            for (Arc b : tr) v.push_back({pt.verts[b.tail], pt.verts[b.head]});
            res = v;
          } catch (const Error&) {
          }
        }
      }
      return cache.emplace(key, std::move(res)).first->second;
    };
    // exit vertex of part k -> (entry, exit of part k-1)
    std::vector<std::map<int, std::pair<int, int>>> reach(m);
    for (int k = 0; k < m; ++k) {
      const auto& pt = ps[k];
      std::vector<int> entries = pt.fe >= 0 ? std::vector<int>{pt.fe} : pt.verts;
      for (int e : entries) {
        int from = -1;
        if (k > 0) {
          for (const auto& [px, _] : reach[k - 1]) {
            bool linked = jump && px == jump->tail && e == jump->head
                              ? true
                              : d.has(px, e) && !(jump && Arc{px, e} == *jump);
            if (linked) {
              from = px;
              break;
            }
          }
          if (from < 0) continue;
        }
        int x = pt.fx >= 0 ? pt.fx : pred(pt, e);
        if (reach[k].count(x) || !inner(k, e, x)) continue;
        reach[k][x] = {e, from};
      }
      if (reach[k].empty()) return std::nullopt;
    }
    std::vector<Arc> out;
    int x = ps[m - 1].fx >= 0 ? ps[m - 1].fx : reach[m - 1].begin()->first;
    if (!reach[m - 1].count(x)) return std::nullopt;
    for (int k = m - 1; k >= 0; --k) {
      auto [e, px] = reach[k].at(x);
      const auto& t = *inner(k, e, x);
      out.insert(out.end(), t.begin(), t.end());
      if (k > 0) out.push_back({px, e});
      x = px;
    }
    return out;
  }

  // split before part c
  std::optional<ArcSet> split(const Digraph& d, const Decomposition& dec, Arc a, int c) {
    std::vector<int> left, right;
    for (int v = 0; v < d.n(); ++v) (dec.ind[v] < c ? left : right).push_back(v);
    std::vector<Arc> across;
    for (int s : right)
      for (int t : left)
        if (d.has(s, t)) across.push_back({s, t});
    if (across.size() != 1) return std::nullopt;
    const int sj = across[0].tail, tj = across[0].head;

    const int zl = static_cast<int>(left.size());
    Digraph dl = grown(d, left, 1);
    for (int i = 0; i < zl; ++i) dl.add_arc(i, zl);
    dl.add_arc(zl, local(left, tj));
    Cycle cl;
    try {
      cl = hamiltonian_cycle(dl);
    } catch (const Error&) {
      return std::nullopt;
    }
    auto pos = std::find(cl.begin(), cl.end(), zl) - cl.begin();
    const int yl_local = cl[(pos + cl.size() - 1) % cl.size()];

    const int zr = static_cast<int>(right.size());
    Digraph dr = grown(d, right, 1);
    for (int i = 0; i < zr; ++i) dr.add_arc(zr, i);
    dr.add_arc(local(right, sj), zr);
    if (!is_strong(dr)) return std::nullopt;
    auto er = sub(dr, {local(right, a.tail), local(right, a.head)});
    if (!er) return std::nullopt;
    int yr_local = -1;
    for (Arc b : *er)
      if (b.tail == zr) yr_local = b.head;
    if (yr_local < 0) return std::nullopt;

    std::vector<Arc> out;
    for (Arc b : cycle_arcs(cl))
      if (b.tail != zl && b.head != zl) out.push_back({left[b.tail], left[b.head]});
    for (Arc b : *er)
      if (b.tail != zr && b.head != zr) out.push_back({right[b.tail], right[b.head]});
    out.push_back({left[yl_local], right[yr_local]});
    out.push_back({sj, tj});
    return make_arcset(out);
  }

  std::optional<ArcSet> peel(const Digraph& d, const Decomposition& dec, Arc a) {
    auto ord = natural_backward_ordering(d, dec);
    const int r = ord.r();
    if (r == 0) return std::nullopt;
    const int tr = ord.t(r), sr = ord.s(r), u = a.tail;
    if (dec.set(1).size() != 1 || dec.set(1)[0] != tr) return std::nullopt;
    std::vector<int> rest;
    for (int v = 0; v < d.n(); ++v)
      if (v != tr) rest.push_back(v);
    Arc la{local(rest, a.tail), local(rest, a.head)};
    // D - t_r plus, optionally, one arc s_r w standing in for s_r t_r w
    auto attempt = [&](int w) -> std::optional<ArcSet> {
      Digraph dw = grown(d, rest, 0);
      Arc bridge{local(rest, sr), w < 0 ? -1 : local(rest, w)};
      const bool fresh = w >= 0 && !dw.has(bridge);
      if (fresh) dw.add_arc(bridge);
      if (!is_strong(dw)) return std::nullopt;
      auto wr = sub(dw, la);
      if (!wr) return std::nullopt;
      std::vector<Arc> out;
      for (Arc b : *wr)
        if (!(fresh && b == bridge)) out.push_back({rest[b.tail], rest[b.head]});
      if (fresh && arcset_contains(*wr, bridge)) {
        out.push_back({sr, tr});
        out.push_back({tr, w});
        return make_arcset(out);
      }
      for (std::size_t i = 0; i < out.size(); ++i)
        if (out[i].tail == sr && out[i] != a) {
          int x = out[i].head;
          out[i] = {sr, tr};
          out.push_back({tr, x});
          return make_arcset(out);
        }
      // s_r = u and uv is its only out-arc
      int z = -1;
      for (Arc b : out)
        if (b.head == u) z = b.tail;
      if (d.has(tr, u)) {
        out.push_back({u, tr});
        out.push_back({tr, u});
        return make_arcset(out);
      }
      for (int y : d.in_neighbours(u)) {
        if (y == z || y == tr || !d.has(tr, y)) continue;
        out.push_back({u, tr});
        out.push_back({tr, y});
        out.push_back({y, u});
        return make_arcset(out);
      }
      return std::nullopt;
    };
    const bool case_a = r == 1 || dec.ind[ord.t(r - 1)] > 2;
    std::vector<int> order;
    if (case_a && sr != u) order.push_back(u);
    order.push_back(-1);
    for (int w : rest)
      if (w != sr && w != u) order.push_back(w);
    if (!case_a && sr != u) order.push_back(u);
    for (int w : order)
      if (auto res = attempt(w)) return res;
    return std::nullopt;
  }

  std::optional<ArcSet> wrap(const Digraph& d, const Decomposition& dec, Arc a) {
    auto ord = natural_backward_ordering(d, dec);
    const int r = ord.r();
    // t_0 = v, s_{r+1} = u
    auto t_of = [&](int j) { return j == 0 ? a.head : ord.t(j); };
    auto s_of = [&](int j) { return j == r + 1 ? a.tail : ord.s(j); };
    std::vector<Arc> out{a};
    std::vector<char> covered(d.n(), 0);
    for (int j = 0; j <= r; ++j) {
      const int t = t_of(j), s = s_of(j + 1);
      const int i1 = dec.ind[t], i2 = dec.ind[s];
      if (i1 > i2) return std::nullopt;
      std::vector<int> xj;
      for (int v = 0; v < d.n(); ++v)
        if (dec.ind[v] >= i1 && dec.ind[v] <= i2) {
          if (covered[v]) return std::nullopt;
          covered[v] = 1;
          xj.push_back(v);
        }
      auto tj = trail_in(grown(d, xj, 0), local(xj, t), local(xj, s), i1 < i2);
      if (!tj) return std::nullopt;
      for (Arc b : *tj) out.push_back({xj[b.tail], xj[b.head]});
      if (j >= 1) out.push_back({ord.s(j), ord.t(j)});
    }
    // a gap between the X_j is an ignored part skipped by uv
    if (std::count(covered.begin(), covered.end(), 0) > 0) return std::nullopt;
    return make_arcset(out);
  }

  // spanning (s,t)-trail of dx as arcs; closed when s == t
  static std::optional<std::vector<Arc>> trail_in(const Digraph& dx, int s, int t, bool spread) {
    try {
      if (s == t) {
        if (dx.n() == 1) return std::vector<Arc>{};
        auto c = cycle_arcs(hamiltonian_cycle(dx));
        return std::vector<Arc>(c.begin(), c.end());
      }
      if (spread && !is_strong(dx)) {
        auto p = path_arcs(hamiltonian_path_between(dx, s, t));
        return std::vector<Arc>(p.begin(), p.end());
      }
      auto tr = trail_arcs(spanning_trail(dx, s, t));
      return std::vector<Arc>(tr.begin(), tr.end());
    } catch (const Error&) {
      return std::nullopt;
    }
  }

  std::optional<ArcSet> sub(const Digraph& d, Arc a) {
    if (d.n() <= 3 && is_d3_bad_arc(d, a)) return std::nullopt;
    return build(d, a, nullptr);
  }
};

}  // namespace

ContainmentTag containment_verdict(const Digraph& d, Arc a, const Decomposition* given) {
  require_input(d, a, "containment_verdict");
  if (d.n() <= 3) return is_d3_bad_arc(d, a) ? ContainmentTag::small_case : ContainmentTag::good;
  Decomposition dec = given ? *given : nice_decomposition(d);
  if (arc_tag(dec, a) != ArcTag::forward) return ContainmentTag::good;
  auto ord = natural_backward_ordering(d, dec);
  const int p = dec.p(), r = ord.r(), iu = dec.ind[a.tail], iv = dec.ind[a.head];
  for (int i : ignored_sets(dec, ord))
    if (iu < i && i < iv) return ContainmentTag::regular_bad;
  if (r >= 1) {
    const int tr = ord.t(r), s1 = ord.s(1);
    if (dec.set(2) == std::vector<int>{a.tail} && dec.set(1) == std::vector<int>{tr} && tr != a.head &&
        !d.has(tr, a.tail))
      return ContainmentTag::left_bad;
    if (dec.set(p - 1) == std::vector<int>{a.head} && dec.set(p) == std::vector<int>{s1} && s1 != a.tail &&
        !d.has(a.head, s1))
      return ContainmentTag::right_bad;
  }
  return ContainmentTag::good;
}

ContainmentClass classify_containment(const Digraph& d, Arc a, const Decomposition* dec) {
  ContainmentClass c;
  c.tag = containment_verdict(d, a, dec);
  if (c.tag == ContainmentTag::regular_bad) {
    Decomposition dd = dec ? *dec : nice_decomposition(d);
    auto ord = natural_backward_ordering(d, dd);
    for (int i : ignored_sets(dd, ord))
      if (dd.ind[a.tail] < i && i < dd.ind[a.head]) {
        c.blocking_set = i;
        break;
      }
  }
  if (!c.good()) return c;
  WitnessBuilder b;
  std::optional<ArcSet> w;
  try {
    w = b.build(d, a, d.n() >= 5 ? dec : nullptr);
  } catch (const Error&) {
    w.reset();
  }
  c.construction = b.how;
  if (w && is_spanning_eulerian(d, *w) && arcset_contains(*w, a)) {
    c.witness = std::move(w);
    return c;
  }
  if (d.n() > 8) throw Error("classify_containment: witness construction failed for a good arc");
  auto found = enumerate_spanning_eulerian(d, {a}, {}, 1);
  if (found.empty()) throw Error("classify_containment: good arc without a spanning eulerian subdigraph");
  c.witness = found.front();
  c.oracle_fallback = true;
  c.construction += c.construction.empty() ? "oracle" : "/oracle";
  return c;
}

namespace {

bool single(const Decomposition& dec, int i) { return i >= 1 && i <= dec.p() && dec.set(i).size() == 1; }

std::vector<UnavoidTag> compulsory_labels(const Digraph& d, Arc a) {
  std::vector<UnavoidTag> out;
  const int n = d.n();
  if (n < 4) return out;
  // exceptional: ab, bc, cd, ad, ca, db present; only cb may be added
  if (n == 4) {
    const int aa = a.tail, dd = a.head;
    std::vector<int> o;
    for (int v = 0; v < 4; ++v)
      if (v != aa && v != dd) o.push_back(v);
    for (int k = 0; k < 2; ++k) {
      int b = o[k], c = o[1 - k];
      ArcSet need = make_arcset({{aa, b}, {b, c}, {c, dd}, {aa, dd}, {c, aa}, {dd, b}});
      bool ok = true;
      for (Arc x : need) ok = ok && d.has(x);
      for (Arc x : d.arcs())
        if (!arcset_contains(need, x) && x != Arc{c, b}) ok = false;
      if (ok) {
        out.push_back(UnavoidTag::exceptional);
        break;
      }
    }
  }
  Decomposition dec = nice_decomposition(d);
  const int p = dec.p();
  const int iu = dec.ind[a.tail], iv = dec.ind[a.head];
  if (iu < iv) {
    auto ord = natural_backward_ordering(d, dec);
    auto ign = ignored_sets(dec, ord);
    auto ignored = [&](int i) { return std::binary_search(ign.begin(), ign.end(), i); };
    if (1 < iu && iu < p - 1 && iv == iu + 1 && single(dec, iu) && single(dec, iv) && ignored(iu) && ignored(iv))
      out.push_back(UnavoidTag::regular_compulsory);
  }
  if (p >= 3 && single(dec, 1) && single(dec, 2) && single(dec, 3)) {
    int v1 = dec.set(1)[0], v2 = dec.set(2)[0], v3 = dec.set(3)[0];
    auto in3 = d.in_neighbours(v3);
    std::sort(in3.begin(), in3.end());
    std::vector<int> want{std::min(v1, v2), std::max(v1, v2)};
    if (a == Arc{v1, v3} && d.has(v2, v1) && !d.has(v1, v2) && !d.has(v3, v2) && in3 == want)
      out.push_back(UnavoidTag::left_compulsory);
  }
  if (p >= 3 && single(dec, p - 2) && single(dec, p - 1) && single(dec, p)) {
    int w1 = dec.set(p - 2)[0], w2 = dec.set(p - 1)[0], w3 = dec.set(p)[0];
    auto out1 = d.out_neighbours(w1);
    std::sort(out1.begin(), out1.end());
    std::vector<int> want{std::min(w2, w3), std::max(w2, w3)};
    if (a == Arc{w1, w3} && d.has(w3, w2) && !d.has(w2, w3) && !d.has(w2, w1) && out1 == want)
      out.push_back(UnavoidTag::right_compulsory);
  }
  return out;
}

}  // namespace

UnavoidClass classify_unavoidable(const Digraph& d, Arc a, bool with_witness) {
  require_input(d, a, "classify_unavoidable");
  const int n = d.n();
  UnavoidClass res;
  const Digraph dp = d.without({a});
  if (!is_strong(dp)) {
    res.tag = UnavoidTag::cut_arc;
    auto comps = strong_components(dp);
    std::vector<char> in_s(n, 0);
    for (int v : comps.back()) in_s[v] = 1;
    res.cut = make_cut(d, in_s);
    return res;
  }
  const int u = a.tail, v = a.head;
  bool blocked = !dp.has(v, u);
  ObstructionPartition part;
  part.y = {std::min(u, v), std::max(u, v)};
  for (int w = 0; w < n && blocked; ++w) {
    if (w == u || w == v) continue;
    bool into = dp.has(w, u) && dp.has(w, v) && !dp.has(u, w) && !dp.has(v, w);
    bool from = dp.has(u, w) && dp.has(v, w) && !dp.has(w, u) && !dp.has(w, v);
    if (into) part.r1.push_back(w);
    else if (from) part.r2.push_back(w);
    else blocked = false;
  }
  if (blocked && arcs_between(dp, part.r2, part.r1) < 2) {
    res.partition = part;
    res.labels = compulsory_labels(d, a);
    if (res.labels.empty()) throw Error("classify_unavoidable: unavoidable arc meets no class definition");
    res.tag = res.labels.front();
    return res;
  }
  res.tag = UnavoidTag::avoidable;
  if (with_witness) {
    auto r = spanning_eulerian_avoiding(d, {a});
    if (r.status == AvoidStatus::obstruction)
      throw Error("classify_unavoidable: avoidance pipeline contradicts the neighbourhood test");
    if (r.status == AvoidStatus::found) res.witness = r.arcs;
  }
  return res;
}

ArcSet unavoidable_arcs(const Digraph& d) {
  if (!is_strong(d)) throw PreconditionError("unavoidable_arcs: digraph is not strong");
  std::vector<Arc> out;
  for (Arc a : d.arcs())
    if (classify_unavoidable(d, a, false).unavoidable()) out.push_back(a);
  return make_arcset(out);
}

}  // namespace eulertrail
