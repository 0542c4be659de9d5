#pragma once

#include <vector>

namespace unisynt {

// Max-even parity game: Player 1 wins a play iff the highest priority seen
// infinitely often is even. Every node needs at least one successor.
struct ParityGame {
  std::vector<int> owner;  // 1 or 2
  std::vector<int> priority;
  std::vector<std::vector<int>> succ;

  int node_count() const { return static_cast<int>(owner.size()); }
};

// Positional solution: per node the winning player, and for nodes owned by
// their winner a successor realizing the win (-1 elsewhere).
struct GameSolution {
  std::vector<int> winner;
  std::vector<int> strategy;
};

GameSolution zielonka_solve(const ParityGame& g);

}  // namespace unisynt
