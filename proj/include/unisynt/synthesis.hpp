#pragma once

#include <string>
#include <utility>
#include <vector>

#include "unisynt/arena.hpp"
#include "unisynt/dpa.hpp"
#include "unisynt/elimination.hpp"
#include "unisynt/formula.hpp"
#include "unisynt/graph.hpp"
#include "unisynt/parity_game.hpp"
#include "unisynt/strategy.hpp"
#include "unisynt/transducer.hpp"

namespace unisynt {

// Parity game deciding whether Player 1 can enforce an R-free formula along
// every play of a tracked graph. A game node pairs a graph node v with the
// deterministic automaton state reached after reading val(v); its priority is
// that state's entry priority, so a play's maximal recurring priority is even
// exactly when the play's label word is accepted.
struct LtlGame {
  DetParityAutomaton dpa;
  std::vector<int> node_graph;  // game node -> graph node
  std::vector<int> node_state;  // game node -> automaton state
  std::vector<int> owner;
  std::vector<int> priority;
  std::vector<std::vector<int>> succ;
  int initial = 0;
  GameSolution solution;
  bool realizable = false;  // initial node won by Player 1

  int node_count() const { return static_cast<int>(node_graph.size()); }
};

// Throws on formulas containing R.
LtlGame ltl_game(const TrackedGraph& g, const Formula& phi);

// Winning machine read off a game built over the arena's own graph: memory =
// automaton states, update total, moves from the winning strategy. Throws
// when the game is not realizable.
StrategyMachine game_machine(const LtlGame& game, const Arena& a);

struct SynthesisResult {
  bool realizable = false;
  StrategyMachine machine;  // meaningful only when realizable
  Elimination elimination;  // kept for inspection and statistics
  std::vector<std::pair<std::string, long long>> stats;
};

// Full pipeline: round-by-round elimination of R over the arena graph, parity
// game on the last layer, then the winning strategy folded back into a
// finite-memory machine over the original arena (memory = game nodes
// reachable under the strategy).
SynthesisResult synthesize_fully_uniform(const Arena& a, const BoundTransducer& t,
                                         const Formula& phi, long long cap = 1000000);

}  // namespace unisynt
