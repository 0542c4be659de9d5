#pragma once

#include <optional>
#include <string>
#include <vector>

#include "unisynt/formula.hpp"
#include "unisynt/graph.hpp"
#include "unisynt/lasso.hpp"

namespace unisynt {

// Nondeterministic Buchi automaton for an R-free formula, built by the
// classic tableau: a tableau state is a truth assignment to the basis
// (atoms, then X-subformulas, then U-subformulas), refined by a counter
// cycling through the U-obligations. The state space stays implicit —
// state = assignment * K + counter — with per-assignment truth tables
// precomputed for the transition test.
//
// A run s0 s1 ... over word a0 a1 ... requires the atom bits of s_i to equal
// a_i (each state reads its own letter); s0 must satisfy the root formula.
struct BuchiAutomaton {
  std::vector<std::string> atoms;  // sorted; occupy the low basis bits
  int bits = 0;                    // basis size
  int K = 1;                       // counter modulus (max(1, #U))

  std::vector<char> init_ok;                 // [assignment] root holds
  std::vector<int> x_bit;                    // basis bit of each X-subformula
  std::vector<std::vector<char>> x_arg_val;  // [x][assignment] arg holds
  std::vector<int> u_bit;
  std::vector<std::vector<char>> u_lhs_val;
  std::vector<std::vector<char>> u_rhs_val;

  int atom_count() const { return static_cast<int>(atoms.size()); }
  int assignments() const { return 1 << bits; }
  int state_count() const { return assignments() * K; }
  int state_assignment(int s) const { return s / K; }
  int state_counter(int s) const { return s % K; }
  uint32_t assignment_letter(int a) const { return a & ((1u << atom_count()) - 1); }

  bool in_f(int a, int k) const;       // assignment in the k-th acceptance set
  bool is_initial(int s) const;
  bool is_accepting(int s) const;      // counter 0 and assignment in set 0
  int next_counter(int a, int k) const;
  bool assignment_edge(int a, int a2) const;
  bool edge(int s, int s2) const;
};

// Throws on R; throws ResourceLimitError when the basis exceeds 14 bits.
BuchiAutomaton ltl_to_nba(const Formula& f);

uint32_t props_letter(const std::vector<std::string>& atoms, const Props& ps);

// Lasso of g (projected from the product with the automaton) whose label word
// the automaton accepts, when one exists.
std::optional<GraphLasso> product_accepting_lasso(const TrackedGraph& g, const BuchiAutomaton& nba);

bool product_empty(const TrackedGraph& g, const BuchiAutomaton& nba);

bool nba_accepts_lasso(const BuchiAutomaton& nba, const LassoWord& w);

// Nodes from which every infinite path of g (ownership ignored) satisfies
// psi; decided through emptiness of the product with the negation automaton.
std::vector<bool> universal_nodes(const TrackedGraph& g, const Formula& psi);

// Same automaton with an explicit reachable transition table, for
// determinization. State 0 is a fresh pre-initial state.
struct ExplicitNba {
  std::vector<std::string> atoms;
  int letters = 1;
  std::vector<bool> accepting;
  std::vector<std::vector<std::vector<int>>> delta;  // [state][letter] -> sorted states

  int state_count() const { return static_cast<int>(accepting.size()); }
};

ExplicitNba nba_explicit(const BuchiAutomaton& nba);

}  // namespace unisynt
