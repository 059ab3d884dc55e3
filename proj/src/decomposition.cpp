#include "eulertrail/decomposition.hpp"

#include <algorithm>

#include "eulertrail/connectivity.hpp"

namespace eulertrail {

Decomposition Decomposition::from_sets(int n, std::vector<std::vector<int>> sets) {
  Decomposition dec;
  dec.ind.assign(n, 0);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    std::sort(sets[i].begin(), sets[i].end());
    for (int v : sets[i]) {
      if (v < 0 || v >= n || dec.ind[v] != 0) throw InvalidParameter("sets do not partition the vertices");
      dec.ind[v] = static_cast<int>(i) + 1;
    }
  }
  for (int v = 0; v < n; ++v)
    if (dec.ind[v] == 0) throw InvalidParameter("vertex " + std::to_string(v) + " not covered");
  dec.sets = std::move(sets);
  return dec;
}

ArcTag arc_tag(const Decomposition& dec, Arc a) {
  int iu = dec.ind[a.tail], iv = dec.ind[a.head];
  if (iu < iv) return ArcTag::forward;
  if (iu > iv) return ArcTag::backward;
  return ArcTag::flat;
}

const char* tag_name(ArcTag t) {
  switch (t) {
    case ArcTag::forward: return "forward";
    case ArcTag::backward: return "backward";
    case ArcTag::flat: return "flat";
  }
  return "?";
}

Decomposition one_decomposition(const Digraph& d) {
  if (!is_strong(d)) throw PreconditionError("one_decomposition: digraph is not strong");
  ArcSet c = cut_arcs(d);
  return Decomposition::from_sets(d.n(), strong_components(d.without(c)));
}

bool is_nice(const Digraph& d, const Decomposition& dec) {
  ArcSet c = cut_arcs(d);
  std::vector<Arc> back;
  for (Arc a : d.arcs())
    if (arc_tag(dec, a) == ArcTag::backward) back.push_back(a);
  return make_arcset(back) == c;
}

Decomposition nice_decomposition(const Digraph& d) {
  if (d.n() < 4) throw PreconditionError("nice_decomposition needs at least 4 vertices");
  if (!is_strong(d)) throw PreconditionError("nice_decomposition: digraph is not strong");
  Decomposition dec = one_decomposition(d);
  ArcSet cuts = cut_arcs(d);
  for (;;) {
    // forward cut-arc with the smallest tail index
    const Arc* pick = nullptr;
    for (const Arc& a : cuts)
      if (arc_tag(dec, a) == ArcTag::forward &&
          (!pick || dec.ind[a.tail] < dec.ind[pick->tail]))
        pick = &a;
    if (!pick) break;
    int iu = dec.ind[pick->tail], iv = dec.ind[pick->head];
    if (iv != iu + 1 || dec.set(iu).size() != 1 || dec.set(iv).size() != 1)
      throw Error("forward cut-arc is not between adjacent singletons");
    std::swap(dec.sets[iu - 1], dec.sets[iv - 1]);
    dec.ind[pick->tail] = iv;
    dec.ind[pick->head] = iu;
  }
  return dec;
}

BackwardOrdering natural_backward_ordering(const Digraph& d, const Decomposition& dec) {
  if (!is_nice(d, dec)) throw PreconditionError("natural_backward_ordering: decomposition is not nice");
  BackwardOrdering ord;
  for (Arc a : d.arcs())
    if (arc_tag(dec, a) == ArcTag::backward) ord.arcs.push_back(a);
  std::sort(ord.arcs.begin(), ord.arcs.end(), [&](Arc a, Arc b) {
    if (dec.ind[a.tail] != dec.ind[b.tail]) return dec.ind[a.tail] > dec.ind[b.tail];
    return a < b;
  });
  return ord;
}

std::vector<int> ignored_sets(const Decomposition& dec, const BackwardOrdering& ord) {
  const int p = dec.p(), r = ord.r();
  auto I = [&](int v) { return dec.ind[v]; };
  std::vector<int> out;
  for (int i = 1; i <= p; ++i) {
    bool ign = false;
    for (int j = 2; j <= r - 1 && !ign; ++j)
      if (I(ord.s(j + 1)) < i && i < I(ord.t(j - 1))) ign = true;
    if (r >= 2) {
      if (1 < i && i < I(ord.t(r - 1))) ign = true;
      if (I(ord.s(2)) < i && i < p) ign = true;
    }
    // r = 1: read t_0 as s_1 and s_2 as t_1
    if (r == 1 && 1 < i && i < p) ign = true;
    if (ign) out.push_back(i);
  }
  return out;
}

std::vector<std::string> verify_structure(const Digraph& d, const Decomposition& dec) {
  std::vector<std::string> bad;
  const int n = d.n();
  // partition
  std::vector<int> seen(n, 0);
  bool part = static_cast<int>(dec.ind.size()) == n;
  for (std::size_t i = 0; i < dec.sets.size() && part; ++i) {
    if (dec.sets[i].empty()) part = false;
    for (int v : dec.sets[i]) {
      if (v < 0 || v >= n || seen[v] || dec.ind[v] != static_cast<int>(i) + 1) part = false;
      else seen[v] = 1;
    }
  }
  if (part && std::count(seen.begin(), seen.end(), 0) > 0) part = false;
  if (!part) return {"partition"};

  for (const auto& s : dec.sets)
    if (!is_strong(d.induced(s))) {
      bad.push_back("strong");
      break;
    }
  if (!is_strong(d)) {
    bad.push_back("digraph not strong");
    return bad;
  }
  ArcSet cuts = cut_arcs(d);
  bool one = true;
  for (Arc a : d.arcs()) {
    ArcTag t = arc_tag(dec, a);
    bool cut = arcset_contains(cuts, a);
    if (t == ArcTag::backward && !cut) one = false;
    if (t == ArcTag::flat && cut) one = false;
  }
  if (!one) bad.push_back("1-decomposition");

  // (i) cut-arcs have distinct tail sets and distinct head sets
  bool i_ok = true;
  for (std::size_t a = 0; a < cuts.size(); ++a)
    for (std::size_t b = a + 1; b < cuts.size(); ++b) {
      if (dec.ind[cuts[a].tail] == dec.ind[cuts[b].tail]) i_ok = false;
      if (dec.ind[cuts[a].head] == dec.ind[cuts[b].head]) i_ok = false;
    }
  if (!i_ok) bad.push_back("(i)");

  // (ii) no nested backward arcs
  std::vector<Arc> back;
  for (Arc a : d.arcs())
    if (arc_tag(dec, a) == ArcTag::backward) back.push_back(a);
  bool ii_ok = true;
  for (Arc uv : back)
    for (Arc xy : back) {
      if (uv == xy) continue;
      int iu = dec.ind[uv.tail], iv = dec.ind[uv.head], ix = dec.ind[xy.tail], iy = dec.ind[xy.head];
      if (iv <= iy && iy < ix && ix <= iu) ii_ok = false;
    }
  if (!ii_ok) bad.push_back("(ii)");

  // (iii)
  if (n >= 4) {
    bool iii_ok = true;
    for (Arc a : cuts) {
      if (arc_tag(dec, a) != ArcTag::forward) continue;
      int iu = dec.ind[a.tail], iv = dec.ind[a.head];
      if (dec.set(iu).size() != 1 || dec.set(iv).size() != 1 || iv != iu + 1) iii_ok = false;
    }
    if (!iii_ok) bad.push_back("(iii)");
  }
  return bad;
}

std::vector<std::string> verify_ordering(const Digraph& d, const Decomposition& dec,
                                         const BackwardOrdering& ord) {
  std::vector<std::string> bad;
  const int r = ord.r(), p = dec.p();
  auto I = [&](int v) { return dec.ind[v]; };
  bool ok = true;
  for (int j = 1; j <= r - 1; ++j)
    if (!(I(ord.t(j + 1)) < I(ord.t(j)) && I(ord.t(j)) <= I(ord.s(j + 1)) &&
          I(ord.s(j + 1)) < I(ord.s(j))))
      ok = false;
  for (int j = 1; j <= r - 2; ++j)
    if (!(I(ord.t(j + 1)) <= I(ord.s(j + 2)) && I(ord.s(j + 2)) < I(ord.t(j)))) ok = false;
  if (!ok) bad.push_back("ordering(i)");
  if (r >= 1 && (I(ord.s(1)) != p || I(ord.t(r)) != 1)) bad.push_back("ordering(ii)");
  bool iii = true;
  for (int j = 1; j <= r - 1; ++j) {
    int tj = ord.t(j), sj1 = ord.s(j + 1);
    if (I(tj) != I(sj1) || tj == sj1) continue;
    const auto& s = dec.set(I(tj));
    Digraph h = d.induced(s);
    int a = static_cast<int>(std::find(s.begin(), s.end(), tj) - s.begin());
    int b = static_cast<int>(std::find(s.begin(), s.end(), sj1) - s.begin());
    if (!arc_disjoint_paths(h, a, b, 2).found()) iii = false;
  }
  if (!iii) bad.push_back("ordering(iii)");
  return bad;
}

Decomposition reverse_decomposition(const Decomposition& dec) {
  Decomposition r;
  r.sets.assign(dec.sets.rbegin(), dec.sets.rend());
  r.ind.resize(dec.ind.size());
  for (std::size_t v = 0; v < dec.ind.size(); ++v) r.ind[v] = dec.p() + 1 - dec.ind[v];
  return r;
}

std::vector<Decomposition> all_nice_decompositions(const Digraph& d, int max_parts) {
  if (!is_strong(d)) throw PreconditionError("all_nice_decompositions: digraph is not strong");
  auto parts = one_decomposition(d).sets;
  const int p = static_cast<int>(parts.size());
  if (p > max_parts) throw SizeError("all_nice_decompositions: " + std::to_string(p) + " parts");
  std::vector<int> perm(p);
  for (int i = 0; i < p; ++i) perm[i] = i;
  std::vector<Decomposition> out;
  do {
    std::vector<std::vector<int>> sets;
    for (int i : perm) sets.push_back(parts[i]);
    auto dec = Decomposition::from_sets(d.n(), std::move(sets));
    if (is_nice(d, dec)) out.push_back(std::move(dec));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace eulertrail
