#include <set>

#include "brute.hpp"
#include "doctest.h"
#include "eulertrail/connectivity.hpp"
#include "eulertrail/trails.hpp"

using namespace eulertrail;

namespace {

void check_trail(const Digraph& d, int x, int y) {
  Trail t = spanning_trail(d, x, y);
  CHECK(validate_trail(d, t, x, y, true));
  ArcSet used = trail_arcs(t);
  CHECK_FALSE(arcset_contains(used, {y, x}));
  std::vector<int> out(d.n(), 0);
  for (Arc a : used) ++out[a.tail];
  for (int v = 0; v < d.n(); ++v) CHECK(out[v] <= 2);
}

}  // namespace

TEST_CASE("spanning trail in the complete digraph on three vertices") {
  Trail t = spanning_trail(complete_digraph(3), 0, 1);
  CHECK(validate_trail(complete_digraph(3), t, 0, 1, true));
  CHECK_FALSE(arcset_contains(trail_arcs(t), {1, 0}));
}

TEST_CASE("x->y with D - yx strong uses a cycle plus xy") {
  Digraph d = complete_digraph(4);
  std::vector<TrailBranch> br;
  Trail t = spanning_trail(d, 0, 1, &br);
  CHECK(validate_trail(d, t, 0, 1, true));
  REQUIRE(!br.empty());
  CHECK(br.front() == TrailBranch::xy_arc);
  CHECK(t.vertices.back() == 1);
  CHECK(t.vertices[t.vertices.size() - 2] == 0);
}

TEST_CASE("missing second path gives a certificate") {
  try {
    spanning_trail(directed_cycle(3), 0, 1);
    FAIL("expected a certificate");
  } catch (const TrailCertificateError& e) {
    CHECK(validate_cut(directed_cycle(3), e.cut));
    CHECK(e.cut.crossing.size() == 1);
  }
  CHECK_THROWS_AS(spanning_trail(directed_cycle(4), 0, 1), PreconditionError);
  CHECK_THROWS_AS(spanning_trail(complete_digraph(3), 1, 1), InvalidParameter);
}

TEST_CASE("2-arc-strong instances are eulerian-connected") {
  int seen = 0;
  for (std::uint64_t seed = 0; seed < 400 && seen < 40; ++seed) {
    Digraph d = gen_random_semicomplete(4 + static_cast<int>(seed % 3), 0.6, seed);
    if (!is_k_arc_strong(d, 2)) continue;
    ++seen;
    for (int x = 0; x < d.n(); ++x)
      for (int y = 0; y < d.n(); ++y)
        if (x != y) {
          check_trail(d, x, y);
          CHECK(brute::trail_exists(d, x, y));
        }
    CHECK(is_eulerian_connected(d).connected);
  }
  CHECK(seen == 40);
}

TEST_CASE("every construction branch is reached") {
  std::set<TrailBranch> hit;
  for (std::uint64_t seed = 0; seed < 3000 && static_cast<int>(hit.size()) < kTrailBranches; ++seed) {
    Digraph d = gen_random_semicomplete(4 + static_cast<int>(seed % 5), 0.15, seed);
    if (!is_strong(d)) continue;
    for (int x = 0; x < d.n(); ++x)
      for (int y = 0; y < d.n(); ++y) {
        if (x == y || !arc_disjoint_paths(d, x, y, 2).found()) continue;
        std::vector<TrailBranch> br;
        Trail t = spanning_trail(d, x, y, &br);
        CHECK(validate_trail(d, t, x, y, true));
        hit.insert(br.begin(), br.end());
      }
  }
  CHECK(static_cast<int>(hit.size()) == kTrailBranches);
}

TEST_CASE("eulerian-connected") {
  CHECK(is_eulerian_connected(complete_digraph(4)).connected);
  auto t = is_eulerian_connected(transitive_tournament(4));
  CHECK_FALSE(t.connected);
  CHECK(t.failing.has_value());
  // the 3-cycle has no spanning (0,1)-trail
  CHECK_FALSE(is_eulerian_connected(directed_cycle(3)).connected);
}

TEST_CASE("trail validation") {
  Digraph k3 = complete_digraph(3);
  CHECK(validate_trail(k3, Trail{{0, 2, 1}}, 0, 1, true));
  CHECK_FALSE(validate_trail(k3, Trail{{0, 1, 0, 1}}, 0, 1, false));
  CHECK_FALSE(validate_trail(k3, Trail{{0, 1}}, 0, 1, true));
  CHECK(validate_trail(k3, Trail{{0, 1}}, 0, 1, false));
  CHECK_FALSE(validate_trail(directed_cycle(3), Trail{{0, 2}}, 0, 2, false));
}

TEST_CASE("minimal path pair") {
  auto pp = minimal_path_pair(complete_digraph(3), 0, 1);
  REQUIRE(pp);
  CHECK(pp->first == std::vector<int>{0, 1});
  CHECK(pp->second == std::vector<int>{0, 2, 1});
  CHECK_FALSE(minimal_path_pair(directed_cycle(3), 0, 1));
}
