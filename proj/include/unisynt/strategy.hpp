#pragma once

#include <array>
#include <string>
#include <vector>

#include "unisynt/arena.hpp"
#include "unisynt/common.hpp"
#include "unisynt/graph.hpp"

namespace unisynt {

// Finite-memory strategy machine for Player 1, bound to an arena.
//
// The memory starts at mem_initial on the initial position and is advanced by
// update[m][v'] on every later arrival at position v'. At a Player-1 position
// v with memory m the strategy plays output[m][v]. Entries are -1 where
// undefined; totality is required only on pairs reachable in outcome_product.
struct StrategyMachine {
  std::string name;
  std::vector<std::string> mem_ids;
  int mem_initial = 0;
  std::vector<std::vector<int>> update;  // [mem][pos] -> mem or -1
  std::vector<std::vector<int>> output;  // [mem][pos] -> pos or -1

  int memory_count() const { return static_cast<int>(mem_ids.size()); }
};

// Parsed but not yet resolved against an arena.
struct RawStrategy {
  std::string name;
  std::vector<std::string> mem_ids;
  std::string initial_mem;
  // (mem, position, target) id triples, in file order.
  std::vector<std::array<std::string, 3>> updates;
  std::vector<std::array<std::string, 3>> moves;
};

// Text format, '#' comments:
//   strategy <name>
//   memory <id> [initial]
//   update <m> <pos> <m'>
//   move <m> <pos> <succ>
RawStrategy parse_strategy(const std::string& text);
RawStrategy load_strategy(const std::string& path);

// Resolves ids, checks moves sit on Player-1 positions and follow arena edges.
StrategyMachine bind_strategy(const RawStrategy& raw, const Arena& a);

std::string strategy_to_text(const StrategyMachine& m, const Arena& a);
std::string strategy_to_dot(const StrategyMachine& m, const Arena& a);

// Graph on reachable (position, memory) pairs from (initial, mem_initial):
// Player-1 nodes keep only the machine's move, Player-2 nodes keep all arena
// successors, memory advances by update on the entered position. Throws
// MachineError when update/output is undefined or the move leaves the edges.
TrackedGraph outcome_product(const Arena& a, const StrategyMachine& m);

}  // namespace unisynt
