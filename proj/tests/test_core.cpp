#include "doctest.h"
#include "eulertrail/core.hpp"
#include "eulertrail/connectivity.hpp"

using namespace eulertrail;

TEST_CASE("digraph storage rejects loops and keeps arcs unique") {
  Digraph d(3);
  CHECK(d.add_arc(0, 1));
  CHECK_FALSE(d.add_arc(0, 1));
  CHECK(d.arc_count() == 1);
  CHECK_THROWS_AS(d.add_arc(1, 1), Error);
  CHECK_THROWS_AS(d.add_arc(0, 3), Error);
  CHECK(d.remove_arc(0, 1));
  CHECK_FALSE(d.remove_arc(0, 1));
  CHECK(d.arc_count() == 0);
}

TEST_CASE("semicomplete and tournament predicates") {
  Digraph d3 = gen_d3();
  CHECK(is_semicomplete(d3));
  CHECK_FALSE(is_tournament(d3));
  CHECK_FALSE(is_semicomplete(directed_cycle(4)));
  CHECK(is_semicomplete(complete_digraph(3)));
  CHECK(is_tournament(directed_cycle(3)));
  CHECK(is_tournament(Digraph(1)));
}

TEST_CASE("named digraphs") {
  Digraph d3 = gen_d3();
  CHECK(d3.n() == 3);
  CHECK(d3.arcs() == ArcSet{{0, 1}, {1, 2}, {2, 0}, {2, 1}});
  // a=0 b=1 c=2 d=3
  Digraph e = gen_exceptional(false);
  CHECK(e.arcs() == make_arcset({{0, 1}, {1, 2}, {2, 3}, {0, 3}, {2, 0}, {3, 1}}));
  Digraph ec = gen_exceptional(true);
  CHECK(ec.arc_count() == 7);
  CHECK(ec.has(2, 1));
  CHECK(is_semicomplete(e));
  CHECK(is_semicomplete(ec));
}

TEST_CASE("bad-arc tournament family") {
  auto inst = gen_bad_arc_tournament(3, 3, 1, 2);
  CHECK(inst.d.n() == 9);
  CHECK(is_tournament(inst.d));
  CHECK(is_strong(inst.d));
  CHECK(inst.xz == Arc{inst.x, inst.z});
  CHECK(inst.d.has(inst.xz));
  CHECK_THROWS_AS(gen_bad_arc_tournament(2, 3, 1, 1), InvalidParameter);
}

TEST_CASE("random generator") {
  CHECK(gen_random_semicomplete(0, 0.0, 7).n() == 0);
  Digraph t = gen_random_semicomplete(5, 0.0, 1);
  CHECK(is_tournament(t));
  CHECK(gen_random_semicomplete(6, 0.5, 42) == gen_random_semicomplete(6, 0.5, 42));
  for (std::uint64_t s = 0; s < 20; ++s) CHECK(is_semicomplete(gen_random_semicomplete(7, 0.3, s)));
  Digraph k = gen_random_semicomplete(5, 1.0, 3);
  CHECK(k == complete_digraph(5));
}

TEST_CASE("json round trip and dot") {
  Digraph c = parse_json(R"({"n":3,"arcs":[[0,1],[1,2],[2,0]]})");
  CHECK(c == directed_cycle(3));
  CHECK(serialize_json(parse_json(R"({"arcs":[[2,0],[0,1],[1,2]],"n":3})")) ==
        R"({"n":3,"arcs":[[0,1],[1,2],[2,0]]})");
  std::string dot = to_dot(c);
  std::size_t edges = 0;
  for (std::size_t p = dot.find("->"); p != std::string::npos; p = dot.find("->", p + 2)) ++edges;
  CHECK(edges == 3);
}

TEST_CASE("json errors") {
  CHECK_THROWS_AS(parse_json("{"), ParseError);
  CHECK_THROWS_AS(parse_json(R"({"arcs":[]})"), ParseError);
  CHECK_THROWS_AS(parse_json(R"({"n":2,"arcs":[[0,0]]})"), ParseError);
  CHECK_THROWS_AS(parse_json(R"({"n":2,"arcs":[[0,1],[0,1]]})"), ParseError);
  CHECK_THROWS_AS(parse_json(R"({"n":2,"arcs":[[0,2]]})"), ParseError);
  CHECK_THROWS_AS(parse_json(R"({"n":2,"arcs":[[0]]})"), ParseError);
}

TEST_CASE("arc set helpers") {
  ArcSet s = make_arcset({{1, 0}, {0, 1}, {1, 0}});
  CHECK(s == ArcSet{{0, 1}, {1, 0}});
  CHECK(arcset_contains(s, {1, 0}));
  CHECK(arcset_union(s, {{2, 0}}).size() == 3);
  CHECK(arcset_minus(s, {{0, 1}}) == ArcSet{{1, 0}});
  CHECK(reverse_arcs({{0, 2}}) == ArcSet{{2, 0}});
  CHECK_THROWS_AS(require_subset(directed_cycle(3), {{1, 0}}, "f"), InvalidParameter);
}
