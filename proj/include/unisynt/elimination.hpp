#pragma once

#include <string>
#include <vector>

#include "unisynt/buchi.hpp"
#include "unisynt/formula.hpp"
#include "unisynt/graph.hpp"
#include "unisynt/infostate.hpp"
#include "unisynt/transducer.hpp"

namespace unisynt {

// One information-tracking round: the graph on (previous-layer node,
// InfoState) pairs. Edges follow the previous layer, the InfoState advancing
// deterministically on the entered node's base letter; hence plays of a layer
// are in bijection with plays of the layer below. A node is labeled with the
// fresh proposition of an eliminated subformula exactly when every related
// play ends where that subformula's argument is universally satisfied.
struct Layer {
  TrackedGraph graph;
  std::vector<int> proj;        // node -> node of the layer below
  std::vector<InfoState> info;  // node -> tracked configurations
  std::vector<std::string> fresh_atoms;  // introduced this round
  std::vector<Formula> replaced;         // replaced subformulas, aligned
};

// Full elimination: one layer per nesting level of R, innermost first.
struct Elimination {
  TrackedGraph base;
  std::vector<Layer> layers;
  Formula final_formula;  // R-free, over base atoms plus fresh @R<k>

  const TrackedGraph& final_graph() const {
    return layers.empty() ? base : layers.back().graph;
  }
};

// Nodes from which every infinite path satisfies the R-free formula.
// Thin named wrapper over the automaton product.
std::vector<bool> universal_positions(const TrackedGraph& g, const Formula& phi);

// Saturating per-round size bound |V| * 2^(|Q| * (|V|+1)).
unsigned long long elimination_round_bound(int nodes, int states);

// One round: eliminates the innermost R-subformulas of phi over `current`,
// appending fresh atoms numbered from *fresh_counter (registry order =
// innermost_r_subformulas order). Throws ResourceLimitError past `cap` nodes.
Layer eliminate_innermost(const TrackedGraph& current, const BoundTransducer& t,
                          const Formula& phi, Formula& phi_out, int& fresh_counter,
                          long long cap);

// Exactly r_depth(phi) rounds; identity (no layers) on R-free input.
Elimination eliminate_all(const TrackedGraph& base, const BoundTransducer& t, const Formula& phi,
                          long long cap = 1000000);

// Final-layer node sequence -> base node sequence (componentwise projection).
std::vector<int> trace_back_play(const Elimination& e, const std::vector<int>& final_nodes);

// Human-readable summary of the layer tower (sizes, registry, InfoStates).
std::string elimination_dump(const Elimination& e, const BoundTransducer& t);

}  // namespace unisynt
