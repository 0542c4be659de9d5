#pragma once

#include <random>
#include <string>
#include <vector>

#include "unisynt/arena.hpp"
#include "unisynt/formula.hpp"
#include "unisynt/graph.hpp"
#include "unisynt/lasso.hpp"
#include "unisynt/parity_game.hpp"
#include "unisynt/strategy.hpp"
#include "unisynt/transducer.hpp"

// Independent reference implementations and random instance generators used
// by the unit and acceptance tests. Everything here works straight from the
// definitions (explicit enumeration, brute force) and shares no code with the
// algorithms under test.
namespace unisynt::oracles {

using Rng = std::mt19937_64;

// Uniform-ish pick in [0, n), deterministic across standard libraries.
int pick(Rng& rng, int n);

// --- fixtures ------------------------------------------------------------

Arena fixture_a1();  // a (P1, p1) <-> b (P2, q)
Arena fixture_a2();  // a1 plus c (P2, r), a <-> c

// --- random instances -----------------------------------------------------

// R-free formula of roughly the given size over the atoms.
Formula random_ltl(Rng& rng, const std::vector<std::string>& atoms, int size);

// Formula from atoms, !, &, X only (bounded lookahead).
Formula random_x_fragment(Rng& rng, const std::vector<std::string>& atoms, int size);

// Formula with R-subformulas of nesting depth exactly 1 (respectively 2)
// whose R bodies stay in the X-fragment, so the direct oracle below is exact.
Formula random_depth1(Rng& rng, const std::vector<std::string>& atoms, int size);
Formula random_depth2(Rng& rng, const std::vector<std::string>& atoms, int size);

LassoWord random_lasso(Rng& rng, const std::vector<std::string>& atoms, int max_stem,
                       int max_loop);

// Bipartite arena, no dead ends, props drawn from {p, q}.
Arena random_arena(Rng& rng, int max_positions);

// Transducer over the arena's positions. Epsilon rules are allowed but
// epsilon-input cycles are avoided, so related plays have bounded length.
// Half of the draws are synchronous class-equivalences, half free-form.
BoundTransducer random_transducer(Rng& rng, const Arena& a, int max_states);

// Total machine with exactly the given memory count.
StrategyMachine random_machine(Rng& rng, const Arena& a, int memory);

// Priorities are drawn from [0, priorities).
ParityGame random_parity_game(Rng& rng, int max_nodes, int priorities, int max_outdeg);

// Lasso-shaped play of the arena (random walk, cut at the first revisit).
GraphLasso random_play(Rng& rng, const Arena& a, int max_stem, int max_loop);

// --- brute-force parity ----------------------------------------------------

// Winner per node by exhausting positional strategy pairs.
std::vector<int> brute_force_parity_winners(const ParityGame& g);

// Every node of each winning region actually wins when its owner follows the
// solution strategy and the opponent tries all positional responses.
bool solution_strategies_sound(const ParityGame& g, const GameSolution& s);

// --- direct relation semantics ---------------------------------------------

// All plays rho2 related to rho by t (input tape rho, output tape rho2),
// found by enumerating candidate plays with transducer-run pruning up to the
// pumping window. Decrements budget per search node; returns false (giving
// up) when the budget is exhausted.
bool enumerate_related(const Arena& a, const BoundTransducer& t, const std::vector<int>& rho,
                       std::vector<std::vector<int>>& out, long long& budget);

// Direct truth of an R-subformula (body in the X-fragment, possibly with
// nested R) after the finite play rho. Sets ok=false when the budget dies.
bool oracle_r_truth(const Arena& a, const BoundTransducer& t, const Formula& rel,
                    const std::vector<int>& rho, long long& budget, bool& ok);

// Max X-nesting of an X-fragment formula (R counts as a leaf).
int x_window(const Formula& f);

// Outcome of comparing elimination labels against the direct semantics.
struct LabelCheck {
  bool gave_up = false;  // oracle budget exhausted; instance inconclusive
  bool agree = true;
  int compared = 0;
};

// Runs the full elimination for phi over the arena, lifts the given play to
// the final layer, and compares every fresh-atom label along it against
// oracle_r_truth on the corresponding real prefix (fresh atoms inside later
// rounds' subformulas are substituted back to their original R-formulas
// first). Walks the play until the lifted (node, loop phase) pair repeats.
LabelCheck check_elimination_labels(const Arena& a, const BoundTransducer& t, const Formula& phi,
                                    const GraphLasso& play, long long budget);

}  // namespace unisynt::oracles
