#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "unisynt/arena.hpp"
#include "unisynt/buchi.hpp"
#include "unisynt/common.hpp"
#include "unisynt/formula.hpp"
#include "unisynt/graph.hpp"
#include "unisynt/strategy.hpp"
#include "unisynt/synthesis.hpp"
#include "unisynt/transducer.hpp"
#include "unisynt/verify.hpp"

using namespace unisynt;

TEST_CASE("ltl_game on the pinned instances") {
  Arena a2 = oracles::fixture_a2();
  LtlGame g = ltl_game(arena_graph(a2), parse_formula("G (p1 | r)"));
  CHECK(g.realizable);
  StrategyMachine m = game_machine(g, a2);
  // The machine must always pick c from a.
  TrackedGraph out = outcome_product(a2, m);
  for (int n = 0; n < out.node_count(); ++n)
    if (out.owner[n] == 1) {
      REQUIRE(out.succ[n].size() == 1);
      CHECK(out.base[out.succ[n][0]] == a2.index_of("c"));
    }
  CHECK(product_empty(out, ltl_to_nba(parse_formula("! G (p1 | r)"))));

  Arena a1 = oracles::fixture_a1();
  LtlGame g1 = ltl_game(arena_graph(a1), parse_formula("G p1"));
  CHECK_FALSE(g1.realizable);
  CHECK_THROWS_AS(game_machine(g1, a1), UnisyntError);
}

TEST_CASE("ltl_game rejects R") {
  Arena a1 = oracles::fixture_a1();
  CHECK_THROWS_AS(ltl_game(arena_graph(a1), parse_formula("R q")), UnisyntError);
}

TEST_CASE("synthesis on the canonical micro-instances") {
  Arena a2 = oracles::fixture_a2();
  SynthesisResult r2 = synthesize_fully_uniform(a2, identity_transducer(a2),
                                                parse_formula("G ! R q"));
  REQUIRE(r2.realizable);
  // Every Player-1 decision of the synthesized machine picks c.
  TrackedGraph out = outcome_product(a2, r2.machine);
  for (int n = 0; n < out.node_count(); ++n)
    if (out.owner[n] == 1) {
      REQUIRE(out.succ[n].size() == 1);
      CHECK(out.base[out.succ[n][0]] == a2.index_of("c"));
    }
  CHECK(check_fully_uniform(a2, identity_transducer(a2), parse_formula("G ! R q"), r2.machine)
            .holds);

  Arena a1 = oracles::fixture_a1();
  SynthesisResult r1 = synthesize_fully_uniform(a1, identity_transducer(a1),
                                                parse_formula("G ! R q"));
  CHECK_FALSE(r1.realizable);
}

TEST_CASE("synthesis statistics carry the layer sizes and bounds") {
  Arena a2 = oracles::fixture_a2();
  SynthesisResult r = synthesize_fully_uniform(a2, identity_transducer(a2),
                                               parse_formula("G ! R q"));
  auto find_stat = [&](const std::string& key) {
    for (const auto& [k, v] : r.stats)
      if (k == key) return v;
    return -1LL;
  };
  CHECK(find_stat("arena_positions") == 3);
  CHECK(find_stat("transducer_states") == 1);
  CHECK(find_stat("r_depth") == 1);
  CHECK(find_stat("layer1_positions") >= 1);
  CHECK(find_stat("layer1_positions") <= find_stat("layer1_bound"));
  CHECK(find_stat("game_nodes") >= 1);
  CHECK(find_stat("machine_memory") >= 1);
}

TEST_CASE("R-free synthesis coincides with the plain LTL game") {
  oracles::Rng rng(103);
  std::vector<std::string> atoms = {"p", "q"};
  for (int it = 0; it < 40; ++it) {
    Arena a = oracles::random_arena(rng, 4);
    Formula phi = oracles::random_ltl(rng, atoms, 1 + oracles::pick(rng, 4));
    SynthesisResult r = synthesize_fully_uniform(a, identity_transducer(a), phi);
    LtlGame g = ltl_game(arena_graph(a), phi);
    CHECK(r.realizable == g.realizable);
  }
}

TEST_CASE("synthesized machines pass the fully-uniform check on random instances") {
  oracles::Rng rng(107);
  std::vector<std::string> atoms = {"p", "q"};
  int realizable = 0;
  for (int it = 0; it < 40; ++it) {
    Arena a = oracles::random_arena(rng, 4);
    BoundTransducer t = oracles::random_transducer(rng, a, 2);
    Formula phi = oracles::random_depth1(rng, atoms, 3);
    SynthesisResult r;
    try {
      r = synthesize_fully_uniform(a, t, phi);
    } catch (const ResourceLimitError&) {
      continue;
    }
    if (!r.realizable) continue;
    ++realizable;
    CHECK(check_fully_uniform(a, t, phi, r.machine).holds);
  }
  CHECK(realizable >= 5);
}

TEST_CASE("bounded enumeration never beats the synthesizer") {
  oracles::Rng rng(109);
  std::vector<std::string> atoms = {"p", "q"};
  for (int it = 0; it < 25; ++it) {
    Arena a = oracles::random_arena(rng, 3);
    BoundTransducer t = oracles::random_transducer(rng, a, 2);
    Formula phi = oracles::random_depth1(rng, atoms, 3);
    SynthesisResult r;
    std::vector<StrategyMachine> found;
    try {
      r = synthesize_fully_uniform(a, t, phi);
      found = enumerate_and_verify(a, t, phi, UniformityMode::kFully, 2);
    } catch (const ResourceLimitError&) {
      continue;
    }
    if (!found.empty()) CHECK(r.realizable);
  }
}

TEST_CASE("game_machine memory covers every automaton state") {
  Arena a2 = oracles::fixture_a2();
  LtlGame g = ltl_game(arena_graph(a2), parse_formula("G (p1 | r)"));
  StrategyMachine m = game_machine(g, a2);
  CHECK(m.memory_count() == g.dpa.state_count());
  // Updates are total: memory transitions defined for every (memory, position).
  for (int k = 0; k < m.memory_count(); ++k)
    for (int v = 0; v < a2.position_count(); ++v) CHECK(m.update[k][v] >= 0);
}
