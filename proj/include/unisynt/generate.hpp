#pragma once

#include <cstdint>
#include <string>

namespace unisynt {

// One generated instance, as file contents ready to write.
struct ExampleFiles {
  std::string arena;
  std::string relation;          // `sim` pairs or a transducer, see below
  bool relation_is_obs = false;  // true: load with obs:, false: with fst:
  std::string formula;
};

// Action-encoded imperfect-information instance: Player-1 positions carry p1,
// every position offers actions x and y (as px/py-labeled Player-2
// positions), the relation is an observation equivalence given by sim pairs,
// and the formula demands the same action on indistinguishable histories.
// With `subjective`, a fresh initial position is prepended whose single
// action lets Player 2 start the play anywhere in the class of the old
// initial position.
ExampleFiles gen_imperfect(uint64_t seed, int size, bool subjective);

// Opacity instance: random bipartite arena with secret positions labeled pS,
// a letter-to-letter observation transducer over two observation classes,
// and the secrecy formula G ! R pS.
ExampleFiles gen_opacity(uint64_t seed, int size);

// Writes arena.txt, relation.txt, formula.txt under dir (created if absent).
void write_example(const ExampleFiles& files, const std::string& dir);

}  // namespace unisynt
