#pragma once

#include <vector>

#include "unisynt/graph.hpp"
#include "unisynt/transducer.hpp"

namespace unisynt {

// One tracked thread of the transducer: its state and the node of the tracked
// graph where the related play currently ends (-1 before the first output).
// Output letters are base positions; a thread advances to the unique successor
// with that base letter and dies when the letter extends no valid play.
using InfoConfig = std::pair<int, int>;

// Canonical (sorted, duplicate-free) set of InfoConfigs, closed under
// output-only transducer moves.
using InfoState = std::vector<InfoConfig>;

// Closure of {(initial transducer state, -1)}: the state before any input.
InfoState initial_infostate(const BoundTransducer& t, const TrackedGraph& g);

// Consumes the base letter of tracked node `entered`: output-closure, one
// input-consuming move, output-closure. Empty sets are legal and absorbing.
InfoState infostate_step(const BoundTransducer& t, const TrackedGraph& g, const InfoState& s,
                         int entered);

// Tracked nodes where an accepted related play can end: lastOut of final-state
// configs. Sorted.
std::vector<int> infostate_extract(const BoundTransducer& t, const InfoState& s);

std::string infostate_format(const BoundTransducer& t, const TrackedGraph& g, const InfoState& s);

}  // namespace unisynt
