#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "unisynt/arena.hpp"
#include "unisynt/common.hpp"
#include "unisynt/graph.hpp"

using namespace unisynt;

TEST_CASE("parse canonical arenas") {
  Arena a1 = oracles::fixture_a1();
  CHECK(a1.name == "A1");
  REQUIRE(a1.position_count() == 2);
  CHECK(a1.owner == std::vector<int>{1, 2});
  CHECK(a1.props[0] == Props{"p1"});
  CHECK(a1.props[1] == Props{"q"});
  CHECK(a1.succ[0] == std::vector<int>{1});
  CHECK(a1.succ[1] == std::vector<int>{0});
  CHECK(a1.initial == 0);
  CHECK(a1.index_of("b") == 1);
  CHECK(a1.index_of("zzz") == -1);

  Arena a2 = oracles::fixture_a2();
  REQUIRE(a2.position_count() == 3);
  CHECK(a2.succ[0] == std::vector<int>{1, 2});  // successor lists sorted
  CHECK(a2.props[2] == Props{"r"});
}

TEST_CASE("arena text round trip") {
  Arena a2 = oracles::fixture_a2();
  Arena back = parse_arena(arena_to_text(a2));
  CHECK(back.name == a2.name);
  CHECK(back.ids == a2.ids);
  CHECK(back.owner == a2.owner);
  CHECK(back.props == a2.props);
  CHECK(back.succ == a2.succ);
  CHECK(back.initial == a2.initial);
}

TEST_CASE("comments and empty props") {
  Arena a = parse_arena(
      "# header comment\n"
      "arena mini\n"
      "position a owner=1 props=-  # no labels\n"
      "position b owner=2 props=x,y\n"
      "edge a b\n"
      "edge b a\n"
      "init a\n");
  CHECK(a.props[0].empty());
  CHECK(a.props[1] == Props{"x", "y"});
}

TEST_CASE("parse and validation errors") {
  // Malformed lines.
  CHECK_THROWS_AS(parse_arena("position a owner=1 props=-\n"), ParseError);  // no header
  CHECK_THROWS_AS(parse_arena("arena z\nposition a owner=3 props=-\nedge a a\ninit a\n"),
                  ParseError);  // bad owner
  CHECK_THROWS_AS(parse_arena("arena z\nposition a owner=1 props=-\n"
                              "position a owner=2 props=-\nedge a a\ninit a\n"),
                  ParseError);  // duplicate id
  CHECK_THROWS_AS(parse_arena("arena z\nposition a owner=1 props=-\nedge a nope\ninit a\n"),
                  ParseError);  // unknown edge target
  // Structural violations.
  CHECK_THROWS_AS(parse_arena("arena z\n"
                              "position a owner=1 props=-\n"
                              "position b owner=1 props=-\n"
                              "edge a b\nedge b a\ninit a\n"),
                  ValidationError);  // same-owner edge
  CHECK_THROWS_AS(parse_arena("arena z\n"
                              "position a owner=1 props=-\n"
                              "position b owner=2 props=-\n"
                              "edge a b\ninit a\n"),
                  ValidationError);  // dead end at b
  CHECK_THROWS_AS(parse_arena("arena z\n"
                              "position a owner=1 props=-\n"
                              "position b owner=2 props=-\n"
                              "edge a b\nedge b a\n"),
                  ParseError);  // missing init
}

TEST_CASE("arena_graph is the identity view") {
  Arena a2 = oracles::fixture_a2();
  TrackedGraph g = arena_graph(a2);
  REQUIRE(g.node_count() == 3);
  CHECK(g.ids == a2.ids);
  CHECK(g.base_ids == a2.ids);
  CHECK(g.val == a2.props);
  CHECK(g.succ == a2.succ);
  CHECK(g.owner == a2.owner);
  CHECK(g.initial == a2.initial);
  for (int n = 0; n < g.node_count(); ++n) CHECK(g.base[n] == n);
  CHECK(graph_step_base(g, 0, 2) == 2);
  CHECK(graph_step_base(g, 1, 2) == -1);
  graph_validate(g, "arena graph");
}

TEST_CASE("arena_is_history") {
  Arena a2 = oracles::fixture_a2();
  CHECK(arena_is_history(a2, {0}));
  CHECK(arena_is_history(a2, {0, 1}));
  CHECK(arena_is_history(a2, {0, 1, 0, 2}));
  CHECK_FALSE(arena_is_history(a2, {1}));        // not the initial position
  CHECK_FALSE(arena_is_history(a2, {0, 0}));     // not an edge
  CHECK_FALSE(arena_is_history(a2, {0, 1, 2}));  // b -> c is not an edge
}

TEST_CASE("random arenas validate and round trip") {
  oracles::Rng rng(11);
  for (int it = 0; it < 100; ++it) {
    Arena a = oracles::random_arena(rng, 6);
    Arena back = parse_arena(arena_to_text(a));
    CHECK(back.succ == a.succ);
    CHECK(back.owner == a.owner);
    CHECK(back.props == a.props);
  }
}

TEST_CASE("arena DOT export names every position") {
  Arena a2 = oracles::fixture_a2();
  std::string dot = arena_to_dot(a2);
  CHECK(dot.find("digraph") != std::string::npos);
  for (const auto& id : a2.ids) CHECK(dot.find(id) != std::string::npos);
}
