#pragma once

#include <string>
#include <vector>

#include "unisynt/buchi.hpp"
#include "unisynt/lasso.hpp"

namespace unisynt {

// Deterministic parity automaton, max-even acceptance: a run is accepting iff
// the highest priority entered infinitely often is even. Priorities sit on
// states (the priority earned when the state is entered); the initial state
// contributes nothing.
struct DetParityAutomaton {
  std::vector<std::string> atoms;
  int letters = 1;
  int initial = 0;
  std::vector<std::vector<int>> delta;  // [state][letter], total
  std::vector<int> priority;

  int state_count() const { return static_cast<int>(delta.size()); }
  int max_priority() const;
};

// Safra determinization followed by an index-appearance-record reduction of
// the Rabin pairs to parity, then monotone priority compression.
DetParityAutomaton determinize_to_parity(const BuchiAutomaton& nba);

bool dpa_accepts_lasso(const DetParityAutomaton& dpa, const LassoWord& w);

}  // namespace unisynt
