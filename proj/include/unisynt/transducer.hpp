#pragma once

#include <array>
#include <string>
#include <vector>

#include "unisynt/arena.hpp"
#include "unisynt/common.hpp"

namespace unisynt {

// Two-tape finite-state transducer over arena positions, parsed form.
struct RawTransducer {
  std::string name;
  std::vector<std::string> state_ids;
  std::string initial;
  std::vector<std::string> finals;
  std::vector<std::array<std::string, 4>> rules;  // from, in, out, to ("-" = epsilon)
};

// Transducer resolved against an arena: letters are position indices, -1 = epsilon.
struct BoundTransducer {
  std::string name;
  std::vector<std::string> state_ids;
  int initial = 0;
  std::vector<bool> final_state;
  struct Rule {
    int from, in, out, to;
  };
  std::vector<Rule> rules;
  std::vector<std::vector<int>> rules_from;  // rule indices grouped by source state

  int state_count() const { return static_cast<int>(state_ids.size()); }
};

// Text format, '#' comments:
//   transducer <name>
//   state <id> [initial] [final]
//   trans <q> <in|-> <out|-> <q'>
RawTransducer parse_transducer(const std::string& text);
RawTransducer load_transducer(const std::string& path);
std::string transducer_to_text(const BoundTransducer& t, const Arena& a);

BoundTransducer bind_transducer(const RawTransducer& raw, const Arena& a);

// Denotes {(rho, rho)}: one final state, a self-loop per position.
BoundTransducer identity_transducer(const Arena& a);

// Per-position observation classes for an equivalence on Player-1 positions
// given by sim pairs (reflexive-symmetric-transitive closure taken here).
// Entry for a Player-2 position is -1. Pairs must name Player-1 positions.
std::vector<int> close_equivalence(const Arena& a,
                                   const std::vector<std::pair<std::string, std::string>>& pairs);

// File listing `sim <u> <u'>` lines.
std::vector<std::pair<std::string, std::string>> parse_sim_pairs(const std::string& text);

// Checks the action-encoded shape: the initial position belongs to Player 1,
// Player-1 positions carry exactly the proposition p1, Player-2 positions
// exactly one other proposition (the action). Returns per-position action
// names ("" on Player-1 positions); throws ValidationError otherwise.
std::vector<std::string> check_obs_shape(const Arena& a);

// Letter-to-letter transducer relating plays that agree on observation
// classes of Player-1 positions and on action propositions of Player-2
// positions. Rejects classes whose members offer different action sets.
BoundTransducer obs_equiv_transducer(const Arena& a,
                                     const std::vector<std::pair<std::string, std::string>>& pairs);

// (rho, rho') related by t: BFS over (state, input index, output index).
bool relates(const BoundTransducer& t, const std::vector<int>& rho, const std::vector<int>& rho2);

}  // namespace unisynt
