#include "eulertrail/core.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "eulertrail/connectivity.hpp"
#include "json.hpp"

namespace eulertrail {

Digraph::Digraph(int n) : n_(n) {
  if (n < 0) throw InvalidParameter("negative vertex count");
  adj_.assign(static_cast<std::size_t>(n) * n, 0);
}

Digraph::Digraph(int n, const std::vector<Arc>& arcs) : Digraph(n) {
  for (Arc a : arcs) add_arc(a.tail, a.head);
}

void Digraph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw InvalidParameter("vertex " + std::to_string(v) + " out of range");
}

bool Digraph::add_arc(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InvalidParameter("loop at vertex " + std::to_string(u));
  auto& c = adj_[idx(u, v)];
  if (c) return false;
  c = 1;
  ++m_;
  return true;
}

bool Digraph::remove_arc(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  auto& c = adj_[idx(u, v)];
  if (!c) return false;
  c = 0;
  --m_;
  return true;
}

ArcSet Digraph::arcs() const {
  ArcSet out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v = 0; v < n_; ++v)
      if (has(u, v)) out.push_back({u, v});
  return out;
}

std::vector<int> Digraph::out_neighbours(int v) const {
  std::vector<int> r;
  for (int w = 0; w < n_; ++w)
    if (has(v, w)) r.push_back(w);
  return r;
}

std::vector<int> Digraph::in_neighbours(int v) const {
  std::vector<int> r;
  for (int w = 0; w < n_; ++w)
    if (has(w, v)) r.push_back(w);
  return r;
}

int Digraph::out_degree(int v) const {
  int c = 0;
  for (int w = 0; w < n_; ++w) c += has(v, w);
  return c;
}

int Digraph::in_degree(int v) const {
  int c = 0;
  for (int w = 0; w < n_; ++w) c += has(w, v);
  return c;
}

Digraph Digraph::without(const ArcSet& f) const {
  Digraph r = *this;
  for (Arc a : f) r.remove_arc(a.tail, a.head);
  return r;
}

Digraph Digraph::reversed() const {
  Digraph r(n_);
  for (int u = 0; u < n_; ++u)
    for (int v = 0; v < n_; ++v)
      if (has(u, v)) r.add_arc(v, u);
  return r;
}

Digraph Digraph::induced(const std::vector<int>& verts) const {
  int k = static_cast<int>(verts.size());
  Digraph r(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j && has(verts[i], verts[j])) r.add_arc(i, j);
  return r;
}

ArcSet make_arcset(std::vector<Arc> arcs) {
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  return arcs;
}

bool arcset_contains(const ArcSet& s, Arc a) { return std::binary_search(s.begin(), s.end(), a); }

ArcSet arcset_union(const ArcSet& a, const ArcSet& b) {
  ArcSet r;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

ArcSet arcset_minus(const ArcSet& a, const ArcSet& b) {
  ArcSet r;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

ArcSet reverse_arcs(const ArcSet& s) {
  std::vector<Arc> r;
  r.reserve(s.size());
  for (Arc a : s) r.push_back({a.head, a.tail});
  return make_arcset(std::move(r));
}

void require_subset(const Digraph& d, const ArcSet& f, const char* what) {
  for (Arc a : f) {
    if (a.tail < 0 || a.tail >= d.n() || a.head < 0 || a.head >= d.n() || !d.has(a))
      throw InvalidParameter(std::string(what) + ": arc (" + std::to_string(a.tail) + "," +
                             std::to_string(a.head) + ") is not in the digraph");
  }
}

bool is_semicomplete(const Digraph& d) {
  for (int u = 0; u < d.n(); ++u)
    for (int v = u + 1; v < d.n(); ++v)
      if (!d.has(u, v) && !d.has(v, u)) return false;
  return true;
}

bool is_tournament(const Digraph& d) {
  for (int u = 0; u < d.n(); ++u)
    for (int v = u + 1; v < d.n(); ++v)
      if (d.has(u, v) == d.has(v, u)) return false;
  return true;
}

Digraph complete_digraph(int n) {
  Digraph d(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) d.add_arc(u, v);
  return d;
}

Digraph directed_cycle(int n) {
  Digraph d(n);
  for (int i = 0; i < n && n > 1; ++i) d.add_arc(i, (i + 1) % n);
  return d;
}

Digraph transitive_tournament(int n) {
  Digraph d(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) d.add_arc(u, v);
  return d;
}

namespace {

// uniform in [0,1), independent of the standard library's distribution code
double unit(std::mt19937_64& g) { return static_cast<double>(g() >> 11) * 0x1.0p-53; }

}  // namespace

Digraph gen_random_semicomplete(int n, double p, std::uint64_t seed) {
  if (n < 0) throw InvalidParameter("n must be non-negative");
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidParameter("two_cycle_prob must be in [0,1]");
  std::mt19937_64 g(seed);
  Digraph d(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (unit(g) < p) {
        d.add_arc(u, v);
        d.add_arc(v, u);
      } else if (g() & 1) {
        d.add_arc(u, v);
      } else {
        d.add_arc(v, u);
      }
    }
  return d;
}

Digraph gen_random_tournament(int n, std::uint64_t seed) { return gen_random_semicomplete(n, 0.0, seed); }

Digraph gen_d3() {
  // x=0 y=1 z=2
  return Digraph(3, {{0, 1}, {1, 2}, {2, 1}, {2, 0}});
}

Digraph gen_exceptional(bool with_cb) {
  // a=0 b=1 c=2 d=3
  Digraph d(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {2, 0}, {3, 1}});
  if (with_cb) d.add_arc(2, 1);
  return d;
}

namespace {

Digraph strong_tournament_from(int n, std::uint64_t& seed) {
  for (int tries = 0; tries < 1000; ++tries, ++seed) {
    Digraph t = gen_random_tournament(n, seed);
    if (is_strong(t)) return t;
  }
  throw Error("no strong tournament on " + std::to_string(n) + " vertices after 1000 seeds");
}

}  // namespace

BadArcInstance gen_bad_arc_tournament(int size_a, int size_b, std::uint64_t seed_a,
                                     std::uint64_t seed_b) {
  if (size_a < 3 || size_b < 3) throw InvalidParameter("sizeA and sizeB must be at least 3");
  Digraph ta = strong_tournament_from(size_a, seed_a);
  Digraph tb = strong_tournament_from(size_b, seed_b);
  // layout: A = 0..size_a-1, then x y z, then B
  int x = size_a, y = size_a + 1, z = size_a + 2, b0 = size_a + 3;
  int n = b0 + size_b;
  Digraph d(n);
  for (Arc a : ta.arcs()) d.add_arc(a.tail, a.head);
  for (Arc a : tb.arcs()) d.add_arc(b0 + a.tail, b0 + a.head);
  for (int a = 0; a < size_a; ++a)
    for (int w : {x, y, z}) d.add_arc(a, w);
  for (int w : {x, y, z})
    for (int b = b0; b < n; ++b) d.add_arc(w, b);
  d.add_arc(x, y);
  d.add_arc(x, z);
  d.add_arc(y, z);
  int a = 0, b = b0;
  for (int u = 0; u < size_a; ++u)
    for (int v = b0; v < n; ++v)
      if (u != a || v != b) d.add_arc(u, v);
  d.add_arc(b, a);
  BadArcInstance r;
  r.d = std::move(d);
  r.xz = {x, z};
  r.x = x;
  r.y = y;
  r.z = z;
  r.a = a;
  r.b = b;
  return r;
}

Digraph parse_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
  }
  // semantic errors point at the key they concern
  auto at = [&](const char* key) {
    auto p = text.find(key);
    return p == std::string::npos ? std::size_t{0} : p;
  };
  if (!j.is_object()) throw ParseError("top level must be an object", 0);
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw ParseError("missing integer field \"n\"", at("\"n\""));
  long long n = j["n"].get<long long>();
  if (n < 0 || n > 100000) throw ParseError("field \"n\" out of range", at("\"n\""));
  if (!j.contains("arcs") || !j["arcs"].is_array())
    throw ParseError("missing array field \"arcs\"", 0);
  Digraph d(static_cast<int>(n));
  std::size_t i = 0;
  for (const auto& a : j["arcs"]) {
    if (!a.is_array() || a.size() != 2 || !a[0].is_number_integer() || !a[1].is_number_integer())
      throw ParseError("arc #" + std::to_string(i) + " is not a pair of integers", 0);
    long long u = a[0].get<long long>(), v = a[1].get<long long>();
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError("arc #" + std::to_string(i) + " has a vertex out of range", at("\"arcs\""));
    if (u == v) throw ParseError("arc #" + std::to_string(i) + " is a loop", at("\"arcs\""));
    if (!d.add_arc(static_cast<int>(u), static_cast<int>(v)))
      throw ParseError("arc #" + std::to_string(i) + " is a duplicate", at("\"arcs\""));
    ++i;
  }
  return d;
}

std::string serialize_json(const Digraph& d) {
  std::ostringstream os;
  os << "{\"n\":" << d.n() << ",\"arcs\":[";
  bool first = true;
  for (Arc a : d.arcs()) {
    if (!first) os << ',';
    first = false;
    os << '[' << a.tail << ',' << a.head << ']';
  }
  os << "]}";
  return os.str();
}

std::string to_dot(const Digraph& d, const ArcSet& highlight) {
  std::ostringstream os;
  os << "digraph D {\n";
  for (int v = 0; v < d.n(); ++v) os << "  " << v << ";\n";
  for (Arc a : d.arcs()) {
    os << "  " << a.tail << " -> " << a.head;
    if (arcset_contains(highlight, a)) os << " [color=blue, penwidth=2]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace eulertrail
