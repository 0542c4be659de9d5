#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "unisynt/buchi.hpp"
#include "unisynt/dpa.hpp"
#include "unisynt/formula.hpp"
#include "unisynt/lasso.hpp"

using namespace unisynt;

namespace {

LassoWord word(std::vector<Props> stem, std::vector<Props> loop) {
  LassoWord w;
  w.stem = std::move(stem);
  w.loop = std::move(loop);
  return w;
}

}  // namespace

TEST_CASE("determinization of pinned formulas") {
  DetParityAutomaton gp = determinize_to_parity(ltl_to_nba(parse_formula("G p")));
  CHECK(dpa_accepts_lasso(gp, word({}, {{"p"}})));
  CHECK_FALSE(dpa_accepts_lasso(gp, word({}, {{"p"}, {}})));
  CHECK_FALSE(dpa_accepts_lasso(gp, word({{"p"}}, {{}})));

  DetParityAutomaton fq = determinize_to_parity(ltl_to_nba(parse_formula("F q")));
  CHECK(dpa_accepts_lasso(fq, word({{}, {}}, {{"q"}})));
  CHECK_FALSE(dpa_accepts_lasso(fq, word({}, {{}})));
}

TEST_CASE("transitions are total and priorities bounded") {
  oracles::Rng rng(61);
  std::vector<std::string> atoms = {"p", "q"};
  for (int it = 0; it < 40; ++it) {
    Formula f = oracles::random_ltl(rng, atoms, 1 + oracles::pick(rng, 5));
    BuchiAutomaton nba = ltl_to_nba(f);
    ExplicitNba ex = nba_explicit(nba);
    DetParityAutomaton dpa = determinize_to_parity(nba);
    REQUIRE(dpa.state_count() >= 1);
    CHECK(dpa.letters == (1 << nba.atom_count()));
    for (int s = 0; s < dpa.state_count(); ++s) {
      REQUIRE(static_cast<int>(dpa.delta[s].size()) == dpa.letters);
      for (int letter = 0; letter < dpa.letters; ++letter) {
        CHECK(dpa.delta[s][letter] >= 0);
        CHECK(dpa.delta[s][letter] < dpa.state_count());
      }
      CHECK(dpa.priority[s] >= 0);
      CHECK(dpa.priority[s] <= 2 * ex.state_count() + 2);
    }
  }
}

TEST_CASE("language agreement with the source automaton and evaluator") {
  oracles::Rng rng(67);
  std::vector<std::string> atoms = {"p", "q"};
  for (int it = 0; it < 120; ++it) {
    Formula f = oracles::random_ltl(rng, atoms, 1 + oracles::pick(rng, 5));
    BuchiAutomaton nba = ltl_to_nba(f);
    DetParityAutomaton dpa = determinize_to_parity(nba);
    for (int probe = 0; probe < 8; ++probe) {
      LassoWord w = oracles::random_lasso(rng, atoms, 3, 3);
      bool truth = eval_ltl_lasso(f, w, 0);
      CHECK(nba_accepts_lasso(nba, w) == truth);
      CHECK(dpa_accepts_lasso(dpa, w) == truth);
    }
  }
}

TEST_CASE("words over a larger atom set restrict to the automaton atoms") {
  // The automaton only reads its own atoms; extra letters in the word must
  // not change membership.
  DetParityAutomaton gp = determinize_to_parity(ltl_to_nba(parse_formula("G p")));
  CHECK(dpa_accepts_lasso(gp, word({}, {{"p", "zz"}})));
  CHECK_FALSE(dpa_accepts_lasso(gp, word({}, {{"zz"}})));
}
