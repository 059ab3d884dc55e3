#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace eulertrail {

struct Arc {
  int tail = 0;
  int head = 0;
  auto operator<=>(const Arc&) const = default;
};

// sorted, duplicate free
using ArcSet = std::vector<Arc>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// caller handed in something outside the operation's domain
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class SizeError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " at offset " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);
  Digraph(int n, const std::vector<Arc>& arcs);

  int n() const { return n_; }
  int arc_count() const { return m_; }

  bool has(int u, int v) const { return adj_[idx(u, v)] != 0; }
  bool has(Arc a) const { return has(a.tail, a.head); }

  // returns false if the arc was already there
  bool add_arc(int u, int v);
  bool remove_arc(int u, int v);
  void add_arc(Arc a) { add_arc(a.tail, a.head); }
  void remove_arc(Arc a) { remove_arc(a.tail, a.head); }

  ArcSet arcs() const;
  std::vector<int> out_neighbours(int v) const;
  std::vector<int> in_neighbours(int v) const;
  int out_degree(int v) const;
  int in_degree(int v) const;

  Digraph without(const ArcSet& f) const;
  Digraph reversed() const;
  // vertex i of the result is verts[i]
  Digraph induced(const std::vector<int>& verts) const;

  bool operator==(const Digraph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

 private:
  std::size_t idx(int u, int v) const { return static_cast<std::size_t>(u) * n_ + v; }
  void check_vertex(int v) const;

  int n_ = 0;
  int m_ = 0;
  std::vector<std::uint8_t> adj_;
};

ArcSet make_arcset(std::vector<Arc> arcs);
bool arcset_contains(const ArcSet& s, Arc a);
ArcSet arcset_union(const ArcSet& a, const ArcSet& b);
ArcSet arcset_minus(const ArcSet& a, const ArcSet& b);
ArcSet reverse_arcs(const ArcSet& s);
// every arc of f must be in d, otherwise InvalidParameter
void require_subset(const Digraph& d, const ArcSet& f, const char* what);

bool is_semicomplete(const Digraph& d);
bool is_tournament(const Digraph& d);

Digraph complete_digraph(int n);
Digraph directed_cycle(int n);
Digraph transitive_tournament(int n);

Digraph gen_random_semicomplete(int n, double two_cycle_prob, std::uint64_t seed);
Digraph gen_random_tournament(int n, std::uint64_t seed);
Digraph gen_d3();
Digraph gen_exceptional(bool with_cb);

struct BadArcInstance {
  Digraph d;
  Arc xz;
  int x = 0, y = 0, z = 0, a = 0, b = 0;
};
BadArcInstance gen_bad_arc_tournament(int size_a, int size_b, std::uint64_t seed_a,
                                     std::uint64_t seed_b);

Digraph parse_json(const std::string& text);
std::string serialize_json(const Digraph& d);
std::string to_dot(const Digraph& d, const ArcSet& highlight = {});

}  // namespace eulertrail
