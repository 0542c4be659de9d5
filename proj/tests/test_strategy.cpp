#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "unisynt/arena.hpp"
#include "unisynt/common.hpp"
#include "unisynt/graph.hpp"
#include "unisynt/strategy.hpp"

using namespace unisynt;

namespace {

const char* kAlwaysC =
    "strategy always_c\n"
    "memory m0 initial\n"
    "move m0 a c\n"
    "update m0 a m0\n"
    "update m0 c m0\n";

StrategyMachine always_c(const Arena& a2) { return bind_strategy(parse_strategy(kAlwaysC), a2); }

// Alternates b and c from position a, toggling memory through the cycle
// a b a c a b ...
StrategyMachine alternator(const Arena& a2) {
  return bind_strategy(parse_strategy("strategy alt\n"
                                      "memory m0 initial\n"
                                      "memory m1\n"
                                      "move m0 a b\n"
                                      "move m1 a c\n"
                                      "update m0 b m1\n"
                                      "update m1 a m1\n"
                                      "update m1 c m0\n"
                                      "update m0 a m0\n"),
                       a2);
}

}  // namespace

TEST_CASE("parse and bind a positional strategy") {
  Arena a2 = oracles::fixture_a2();
  StrategyMachine m = always_c(a2);
  CHECK(m.name == "always_c");
  REQUIRE(m.memory_count() == 1);
  CHECK(m.mem_initial == 0);
  CHECK(m.output[0][0] == 2);   // a -> c
  CHECK(m.output[0][1] == -1);  // no move on Player-2 positions
  CHECK(m.update[0][0] == 0);
  CHECK(m.update[0][1] == -1);  // undefined, b is never reached
}

TEST_CASE("bind rejects inconsistent strategies") {
  Arena a2 = oracles::fixture_a2();
  // Move on a Player-2 position.
  CHECK_THROWS_AS(bind_strategy(parse_strategy("strategy s\nmemory m0 initial\nmove m0 b a\n"), a2),
                  ValidationError);
  // Move that is not an arena edge.
  CHECK_THROWS_AS(bind_strategy(parse_strategy("strategy s\nmemory m0 initial\nmove m0 a a\n"), a2),
                  ValidationError);
  // Unknown position id.
  CHECK_THROWS_AS(
      bind_strategy(parse_strategy("strategy s\nmemory m0 initial\nmove m0 zz a\n"), a2),
      ValidationError);
  // Unknown memory id.
  CHECK_THROWS_AS(bind_strategy(parse_strategy("strategy s\nmemory m0 initial\nmove m9 a c\n"), a2),
                  ValidationError);
  // Missing initial marker.
  CHECK_THROWS_AS(bind_strategy(parse_strategy("strategy s\nmemory m0\nmove m0 a c\n"), a2),
                  ParseError);
}

TEST_CASE("strategy text round trip") {
  Arena a2 = oracles::fixture_a2();
  StrategyMachine m = alternator(a2);
  StrategyMachine back = bind_strategy(parse_strategy(strategy_to_text(m, a2)), a2);
  CHECK(back.mem_initial == m.mem_initial);
  CHECK(back.update == m.update);
  CHECK(back.output == m.output);
}

TEST_CASE("outcome product of the positional machine") {
  Arena a2 = oracles::fixture_a2();
  TrackedGraph out = outcome_product(a2, always_c(a2));
  REQUIRE(out.node_count() == 2);  // (a, m0) and (c, m0)
  CHECK(out.base[out.initial] == 0);
  CHECK(out.succ[out.initial].size() == 1);
  int c_node = out.succ[out.initial][0];
  CHECK(out.base[c_node] == 2);
  CHECK(out.succ[c_node] == std::vector<int>{out.initial});
  CHECK(out.val[out.initial] == Props{"p1"});
  CHECK(out.val[c_node] == Props{"r"});
  CHECK(out.owner[c_node] == 2);
}

TEST_CASE("outcome product tracks memory separately per visit") {
  Arena a2 = oracles::fixture_a2();
  TrackedGraph out = outcome_product(a2, alternator(a2));
  // Cycle (a,m0) -> (b,m1) -> (a,m1) -> (c,m0) -> (a,m0): four reachable
  // nodes and the base projection spells a b a c.
  REQUIRE(out.node_count() == 4);
  std::vector<int> bases;
  int n = out.initial;
  for (int i = 0; i < 4; ++i) {
    bases.push_back(out.base[n]);
    REQUIRE(out.succ[n].size() == 1);
    n = out.succ[n][0];
  }
  CHECK(n == out.initial);
  CHECK(bases == std::vector<int>{0, 1, 0, 2});
  graph_validate(out, "outcome product");
}

TEST_CASE("outcome product keeps every Player-2 branch") {
  Arena a1 = oracles::fixture_a1();
  // On A1 Player 1 has one choice; outcome = the single play a b a b ...
  StrategyMachine m = bind_strategy(
      parse_strategy("strategy s\nmemory m0 initial\nmove m0 a b\nupdate m0 a m0\nupdate m0 b m0\n"),
      a1);
  TrackedGraph out = outcome_product(a1, m);
  CHECK(out.node_count() == 2);

  Arena branchy = parse_arena(
      "arena br\n"
      "position s owner=2 props=x\n"
      "position a owner=1 props=p1\n"
      "position b owner=1 props=p1\n"
      "edge s a\nedge s b\nedge a s\nedge b s\n"
      "init s\n");
  StrategyMachine n = bind_strategy(parse_strategy("strategy s\nmemory m0 initial\n"
                                                   "move m0 a s\nmove m0 b s\n"
                                                   "update m0 s m0\nupdate m0 a m0\nupdate m0 b m0\n"),
                                    branchy);
  TrackedGraph out2 = outcome_product(branchy, n);
  // From the initial Player-2 position both arena branches stay in.
  CHECK(out2.succ[out2.initial].size() == 2);
}

TEST_CASE("outcome product demands totality on reachable pairs only") {
  Arena a2 = oracles::fixture_a2();
  // Reachable Player-1 position without a move.
  StrategyMachine no_move = bind_strategy(
      parse_strategy("strategy s\nmemory m0 initial\nupdate m0 a m0\nupdate m0 b m0\n"), a2);
  CHECK_THROWS_AS(outcome_product(a2, no_move), MachineError);
  // Reachable position without an update.
  StrategyMachine no_update =
      bind_strategy(parse_strategy("strategy s\nmemory m0 initial\nmove m0 a c\nupdate m0 a m0\n"),
                    a2);
  CHECK_THROWS_AS(outcome_product(a2, no_update), MachineError);
  // The same rows are fine when b/c stay unreachable.
  CHECK_NOTHROW(outcome_product(a2, always_c(a2)));
}

TEST_CASE("strategy DOT export") {
  Arena a2 = oracles::fixture_a2();
  std::string dot = strategy_to_dot(always_c(a2), a2);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("m0") != std::string::npos);
}

TEST_CASE("random machines build valid outcome products") {
  oracles::Rng rng(23);
  for (int it = 0; it < 100; ++it) {
    Arena a = oracles::random_arena(rng, 5);
    StrategyMachine m = oracles::random_machine(rng, a, 1 + oracles::pick(rng, 2));
    TrackedGraph out = outcome_product(a, m);
    graph_validate(out, "outcome product");
    // Player-1 nodes follow the machine: single successor.
    for (int n = 0; n < out.node_count(); ++n)
      if (out.owner[n] == 1) CHECK(out.succ[n].size() == 1);
  }
}
