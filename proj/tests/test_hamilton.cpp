#include "doctest.h"
#include "eulertrail/connectivity.hpp"
#include "eulertrail/hamilton.hpp"

using namespace eulertrail;

namespace {

bool is_path(const Digraph& d, const Path& p) {
  if (static_cast<int>(p.size()) != d.n()) return false;
  std::vector<char> seen(d.n(), 0);
  for (int v : p) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (!d.has(p[i], p[i + 1])) return false;
  return true;
}

bool is_cycle(const Digraph& d, const Cycle& c) {
  return is_path(d, c) && (c.size() == 1 || d.has(c.back(), c.front()));
}

}  // namespace

TEST_CASE("hamiltonian paths") {
  CHECK(hamiltonian_path(transitive_tournament(3)) == Path{0, 1, 2});
  CHECK(is_path(directed_cycle(3), hamiltonian_path(directed_cycle(3))));
  CHECK(hamiltonian_path(Digraph(1)) == Path{0});
  CHECK(hamiltonian_path_between(transitive_tournament(3), 0, 2) == Path{0, 1, 2});
}

TEST_CASE("path between generators of two 3-cycles") {
  Digraph d(6);
  for (int i = 0; i < 3; ++i) {
    d.add_arc(i, (i + 1) % 3);
    d.add_arc(3 + i, 3 + (i + 1) % 3);
    for (int j = 3; j < 6; ++j) d.add_arc(i, j);
  }
  for (int x = 0; x < 3; ++x)
    for (int y = 3; y < 6; ++y) {
      Path p = hamiltonian_path_between(d, x, y);
      CHECK(is_path(d, p));
      CHECK(p.front() == x);
      CHECK(p.back() == y);
    }
}

TEST_CASE("paths from any vertex of a strong digraph") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Digraph d = gen_random_semicomplete(7, 0.2, seed);
    if (!is_strong(d)) continue;
    for (int x = 0; x < 7; ++x) {
      Path p = hamiltonian_path_between(d, x);
      CHECK(is_path(d, p));
      CHECK(p.front() == x);
    }
  }
}

TEST_CASE("hamiltonian cycles") {
  CHECK(is_cycle(directed_cycle(3), hamiltonian_cycle(directed_cycle(3))));
  CHECK(rotate_to(hamiltonian_cycle(gen_d3()), 0) == Cycle{0, 1, 2});
  Digraph t4(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {1, 3}, {3, 0}});
  CHECK(rotate_to(hamiltonian_cycle(t4), 0) == Cycle{0, 1, 2, 3});
  CHECK(cycle_arcs({0, 1, 2}) == ArcSet{{0, 1}, {1, 2}, {2, 0}});
  CHECK(path_arcs({0, 1, 2}) == ArcSet{{0, 1}, {1, 2}});
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Digraph d = gen_random_semicomplete(3 + static_cast<int>(seed % 12), 0.3, seed);
    if (!is_strong(d)) continue;
    CHECK(is_cycle(d, hamiltonian_cycle(d)));
  }
  CHECK_THROWS_AS(hamiltonian_cycle(transitive_tournament(4)), PreconditionError);
}

TEST_CASE("cycle covering the complement of a subdigraph") {
  Digraph k4 = complete_digraph(4);
  Cycle c = cycle_covering_complement(k4, {0, 1}, {{0, 1}}, 0);
  std::vector<char> on(4, 0);
  for (int v : c) on[v] = 1;
  CHECK(on[0]);
  CHECK(on[2]);
  CHECK(on[3]);
  for (Arc a : cycle_arcs(c)) {
    CHECK(k4.has(a));
    CHECK(a != Arc{0, 1});
  }
  Cycle all = cycle_covering_complement(k4, {0, 1, 2, 3}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, 2);
  CHECK(std::find(all.begin(), all.end(), 2) != all.end());
}
