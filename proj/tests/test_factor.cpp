#include "brute.hpp"
#include "doctest.h"
#include "eulertrail/connectivity.hpp"
#include "eulertrail/factor.hpp"
#include "eulertrail/oracle.hpp"

using namespace eulertrail;

namespace {

Digraph two_way_pairs() {
  // 2-cycles {0,1} and {2,3}; every other pair one way from the first to the second
  Digraph d(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}});
  for (int u : {0, 1})
    for (int v : {2, 3}) d.add_arc(u, v);
  return d;
}

Digraph random_strong_at_least(int n, int lambda, std::uint64_t& seed) {
  for (;; ++seed) {
    Digraph d = gen_random_semicomplete(n, 0.7, seed);
    if (is_k_arc_strong(d, lambda)) return d;
  }
}

ArcSet random_arcs(const Digraph& d, int k, std::uint64_t seed) {
  ArcSet all = d.arcs();
  std::vector<Arc> pick;
  std::uint64_t x = seed * 2654435761u + 1;
  while (static_cast<int>(pick.size()) < k) {
    x = x * 6364136223846793005ULL + 1442695040888963407ULL;
    Arc a = all[(x >> 33) % all.size()];
    if (std::find(pick.begin(), pick.end(), a) == pick.end()) pick.push_back(a);
  }
  return make_arcset(pick);
}

}  // namespace

TEST_CASE("factors of small named digraphs") {
  auto k4 = eulerian_factor(complete_digraph(4));
  REQUIRE(k4.factor);
  CHECK(validate_factor(complete_digraph(4), *k4.factor));
  auto c3 = eulerian_factor(directed_cycle(3));
  REQUIRE(c3.factor);
  CHECK(c3.factor->arcs == directed_cycle(3).arcs());
  CHECK(c3.factor->components.size() == 1);
}

TEST_CASE("exceptional digraph without ad has the documented obstruction") {
  Digraph e = gen_exceptional(false);
  auto r = eulerian_factor(e, {{0, 3}});
  CHECK_FALSE(r.factor);
  REQUIRE(r.obstruction);
  CHECK(r.obstruction->y == std::vector<int>{0, 3});
  CHECK(r.obstruction->r1 == std::vector<int>{2});
  CHECK(r.obstruction->r2 == std::vector<int>{1});
  CHECK(validate_obstruction(e, *r.obstruction, {{0, 3}}));
  CHECK_FALSE(validate_obstruction(e, *r.obstruction));
}

TEST_CASE("factor decision matches the oracle on exhaustive families") {
  auto check = [](const Digraph& d) {
    for (const ArcSet& avoid : {ArcSet{}, ArcSet{d.arcs().front()}}) {
      auto r = eulerian_factor(d, avoid);
      bool truth = oracle_eulerian_factor(d, avoid);
      CHECK(r.factor.has_value() == truth);
      if (r.factor) CHECK(validate_factor(d, *r.factor, avoid));
      if (r.obstruction) CHECK(validate_obstruction(d, *r.obstruction, avoid));
    }
  };
  for_each_semicomplete(4, check);
  for_each_tournament(5, check);
}

TEST_CASE("factor guarantee") {
  std::uint64_t seed = 1;
  for (int i = 0; i < 20; ++i) {
    Digraph d = random_strong_at_least(6, 2, seed);
    ++seed;
    CHECK(factor_exists_guarantee(d, 1));
    for (Arc a : d.arcs()) CHECK(eulerian_factor(d, {a}).factor.has_value());
  }
  CHECK_FALSE(factor_exists_guarantee(directed_cycle(3), 1));
  CHECK(factor_exists_guarantee(directed_cycle(3), 0));
  for (int i = 0; i < 100; ++i) {
    Digraph d = random_strong_at_least(7, 4, seed);
    ++seed;
    ArcSet f = random_arcs(d, 3, seed);
    auto r = eulerian_factor(d, f);
    REQUIRE(r.factor);
    CHECK(validate_factor(d, *r.factor, f));
  }
}

TEST_CASE("merge patterns") {
  Digraph k4 = complete_digraph(4);
  auto rep = check_merge_obstructions(k4, {{0, 1}, {1, 0}}, {{2, 3}, {3, 2}});
  CHECK(rep.mergeable());
  CHECK(std::any_of(rep.patterns.begin(), rep.patterns.end(), [](const MergePattern& p) { return p.rule == 'a'; }));

  // arc 01 in H1, x = 2 in H2 with 0->2 and 2->1, nothing both ways
  Digraph b(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}, {0, 2}, {2, 1}, {0, 3}, {1, 3}});
  auto rb = check_merge_obstructions(b, {{0, 1}, {1, 0}}, {{2, 3}, {3, 2}});
  CHECK(std::any_of(rb.patterns.begin(), rb.patterns.end(), [](const MergePattern& p) {
    return p.rule == 'b' && p.vertices == std::vector<int>{0, 1, 2};
  }));

  auto none = check_merge_obstructions(two_way_pairs(), {{0, 1}, {1, 0}}, {{2, 3}, {3, 2}});
  CHECK(none.patterns.empty());
  CHECK_FALSE(none.mergeable());
  CHECK_THROWS_AS(check_merge_obstructions(k4, {{0, 1}, {1, 0}}, {{1, 2}, {2, 1}}), InvalidParameter);
}

TEST_CASE("merge_all joins components") {
  Digraph k4 = complete_digraph(4);
  EulerianFactor f = make_factor(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}});
  CHECK(f.components.size() == 2);
  MergeTrace trace;
  EulerianFactor m = merge_all(k4, f, {}, &trace);
  CHECK(m.components.size() == 1);
  CHECK(oracle_is_spanning_eulerian(k4, m.arcs));
  CHECK(!trace.applied.empty());
  EulerianFactor whole = make_factor(3, directed_cycle(3).arcs());
  CHECK(merge_all(directed_cycle(3), whole).arcs == whole.arcs);
  // avoided arcs stay out
  EulerianFactor m2 = merge_all(k4, f, {{0, 2}, {2, 0}});
  for (Arc a : m2.arcs) CHECK((a != Arc{0, 2} && a != Arc{2, 0}));
}

TEST_CASE("star-sets and multipartite remainders") {
  Digraph k5 = complete_digraph(5);
  CHECK(is_star_set(k5, {{0, 1}, {2, 3}}));
  CHECK_FALSE(is_star_set(k5, {{0, 1}, {1, 2}, {2, 3}}));
  CHECK(is_star_set(k5, {{0, 1}, {2, 0}, {0, 3}}));
  // a 2-cycle is one undirected edge
  CHECK(is_star_set(k5, {{0, 1}, {1, 0}}));
  Digraph t = gen_random_semicomplete(6, 0.0, 5);
  ArcSet f = {t.arcs()[0]};
  CHECK(is_multipartite_remainder(t, f));
  ArcSet red = multipartite_reduction_arcs(k5, {{0, 1}, {1, 2}});
  for (Arc a : red) {
    bool in_012 = a.tail <= 2 && a.head <= 2;
    CHECK(in_012);
  }
}

TEST_CASE("spanning eulerian subdigraphs avoiding arc sets") {
  std::uint64_t seed = 100;
  for (int i = 0; i < 40; ++i) {
    Digraph d = random_strong_at_least(6 + i % 3, 2, seed);
    ++seed;
    ArcSet f = random_arcs(d, 1, seed);
    auto r = spanning_eulerian_avoiding(d, f);
    CHECK(r.status == AvoidStatus::found);
    CHECK(r.guaranteed);
    CHECK(validate_avoiding(d, f, r));
  }
  for (int i = 0; i < 40; ++i) {
    Digraph d = random_strong_at_least(7 + i % 4, 4, seed);
    ++seed;
    ArcSet f = random_arcs(d, 3, seed);
    auto r = spanning_eulerian_avoiding(d, f);
    CHECK(r.status == AvoidStatus::found);
    CHECK(validate_avoiding(d, f, r));
  }
  Digraph e = gen_exceptional(false);
  auto obs = spanning_eulerian_avoiding(e, {{0, 3}});
  CHECK(obs.status == AvoidStatus::obstruction);
  REQUIRE(obs.partition);
  CHECK(obs.partition->y == std::vector<int>{0, 3});
  CHECK(validate_avoiding(e, {{0, 3}}, obs));
  auto cut = spanning_eulerian_avoiding(directed_cycle(3), {{0, 1}});
  CHECK(cut.status == AvoidStatus::obstruction);
  CHECK(cut.cut.has_value());
  CHECK(validate_avoiding(directed_cycle(3), {{0, 1}}, cut));
}

TEST_CASE("reduction to a multipartite digraph") {
  std::uint64_t seed = 900;
  for (int i = 0; i < 20; ++i) {
    Digraph d = random_strong_at_least(14, 8, seed);
    ++seed;
    ArcSet f = random_arcs(d, 4, seed);
    auto w = avoid_by_reduction(d, f);
    REQUIRE(w);
    CHECK(validate_avoiding(d, f, AvoidResult{AvoidStatus::found, *w, {}, {}, "", false}));
  }
}

TEST_CASE("avoidance agrees with the oracle on small instances") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    Digraph d = gen_random_semicomplete(5, 0.4, seed);
    if (!is_strong(d)) continue;
    ArcSet f = random_arcs(d, 1 + static_cast<int>(seed % 3), seed);
    auto r = spanning_eulerian_avoiding(d, f);
    CAPTURE(seed);
    REQUIRE(r.status != AvoidStatus::unknown);
    CHECK((r.status == AvoidStatus::found) == brute::spanning_eulerian_exists(d, {}, f));
    CHECK(validate_avoiding(d, f, r));
  }
}
