#include "unisynt/synthesis.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <utility>

#include "unisynt/buchi.hpp"
#include "unisynt/common.hpp"

namespace unisynt {

LtlGame ltl_game(const TrackedGraph& g, const Formula& phi) {
  LtlGame game;
  game.dpa = determinize_to_parity(ltl_to_nba(phi));
  const DetParityAutomaton& dpa = game.dpa;

  std::vector<int> letter(g.node_count());
  for (int v = 0; v < g.node_count(); ++v)
    letter[v] = static_cast<int>(props_letter(dpa.atoms, g.val[v]));

  std::map<std::pair<int, int>, int> index;
  std::vector<std::pair<int, int>> nodes;
  auto intern = [&](int v, int d) {
    auto key = std::make_pair(v, d);
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(nodes.size());
    index.emplace(key, id);
    nodes.push_back(key);
    return id;
  };

  game.initial = intern(g.initial, dpa.delta[dpa.initial][letter[g.initial]]);
  for (size_t i = 0; i < nodes.size(); ++i) {
    auto [v, d] = nodes[i];
    std::vector<int> out;
    for (int u : g.succ[v]) out.push_back(intern(u, dpa.delta[d][letter[u]]));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    game.succ.push_back(std::move(out));
  }

  int n = static_cast<int>(nodes.size());
  game.node_graph.resize(n);
  game.node_state.resize(n);
  game.owner.resize(n);
  game.priority.resize(n);
  for (int i = 0; i < n; ++i) {
    game.node_graph[i] = nodes[i].first;
    game.node_state[i] = nodes[i].second;
    game.owner[i] = g.owner[nodes[i].first];
    game.priority[i] = dpa.priority[nodes[i].second];
  }

  ParityGame pg;
  pg.owner = game.owner;
  pg.priority = game.priority;
  pg.succ = game.succ;
  game.solution = zielonka_solve(pg);
  game.realizable = game.solution.winner[game.initial] == 1;
  return game;
}

StrategyMachine game_machine(const LtlGame& game, const Arena& a) {
  if (!game.realizable) throw UnisyntError("no winning machine: the game is lost from the start");
  const DetParityAutomaton& dpa = game.dpa;
  int pos_n = static_cast<int>(a.ids.size());

  std::vector<int> letter(pos_n);
  for (int v = 0; v < pos_n; ++v)
    letter[v] = static_cast<int>(props_letter(dpa.atoms, a.props[v]));

  StrategyMachine m;
  m.name = "sigma_" + a.name;
  for (int d = 0; d < dpa.state_count(); ++d) m.mem_ids.push_back("d" + std::to_string(d));
  m.mem_initial = dpa.delta[dpa.initial][letter[a.initial]];
  m.update.assign(dpa.state_count(), std::vector<int>(pos_n, -1));
  m.output.assign(dpa.state_count(), std::vector<int>(pos_n, -1));
  for (int d = 0; d < dpa.state_count(); ++d)
    for (int v = 0; v < pos_n; ++v) m.update[d][v] = dpa.delta[d][letter[v]];

  for (int i = 0; i < game.node_count(); ++i) {
    if (game.owner[i] != 1 || game.solution.winner[i] != 1) continue;
    int s = game.solution.strategy[i];
    if (s < 0) continue;
    m.output[game.node_state[i]][game.node_graph[i]] = game.node_graph[s];
  }
  return m;
}

SynthesisResult synthesize_fully_uniform(const Arena& a, const BoundTransducer& t,
                                         const Formula& phi, long long cap) {
  SynthesisResult r;
  TrackedGraph base = arena_graph(a);
  r.elimination = eliminate_all(base, t, phi, cap);
  const TrackedGraph& top = r.elimination.final_graph();

  auto clamp_stat = [](unsigned long long v) {
    unsigned long long top_ll =
        static_cast<unsigned long long>(std::numeric_limits<long long>::max());
    return v > top_ll ? std::numeric_limits<long long>::max() : static_cast<long long>(v);
  };
  r.stats.emplace_back("arena_positions", base.node_count());
  r.stats.emplace_back("transducer_states", t.state_count());
  r.stats.emplace_back("r_depth", r_depth(phi));
  for (size_t k = 0; k < r.elimination.layers.size(); ++k) {
    int below = k == 0 ? base.node_count() : r.elimination.layers[k - 1].graph.node_count();
    std::string tag = "layer" + std::to_string(k + 1);
    r.stats.emplace_back(tag + "_positions", r.elimination.layers[k].graph.node_count());
    r.stats.emplace_back(tag + "_bound",
                         clamp_stat(elimination_round_bound(below, t.state_count())));
  }

  LtlGame game = ltl_game(top, r.elimination.final_formula);
  r.stats.emplace_back("automaton_states", game.dpa.state_count());
  r.stats.emplace_back("automaton_priorities", game.dpa.max_priority());
  r.stats.emplace_back("game_nodes", game.node_count());

  r.realizable = game.realizable;
  if (!r.realizable) return r;

  // Memory = game nodes visited when Player 1 follows the winning strategy
  // and Player 2 moves freely.
  std::vector<int> mem_of(game.node_count(), -1);
  std::vector<int> order;
  auto visit = [&](int gn) {
    if (mem_of[gn] < 0) {
      mem_of[gn] = static_cast<int>(order.size());
      order.push_back(gn);
    }
    return mem_of[gn];
  };
  visit(game.initial);
  for (size_t qi = 0; qi < order.size(); ++qi) {
    int i = order[qi];
    if (game.owner[i] == 1) {
      int s = game.solution.strategy[i];
      if (s < 0) throw UnisyntError("winning strategy undefined on a reachable node");
      visit(s);
    } else {
      for (int s : game.succ[i]) visit(s);
    }
  }

  StrategyMachine m;
  m.name = "sigma_" + a.name;
  m.mem_initial = 0;
  int mem_n = static_cast<int>(order.size());
  int pos_n = static_cast<int>(a.ids.size());
  for (int k = 0; k < mem_n; ++k) m.mem_ids.push_back("m" + std::to_string(k));
  m.update.assign(mem_n, std::vector<int>(pos_n, -1));
  m.output.assign(mem_n, std::vector<int>(pos_n, -1));
  for (int k = 0; k < mem_n; ++k) {
    int i = order[k];
    int x = game.node_graph[i];
    if (game.owner[i] == 1) {
      int s = game.solution.strategy[i];
      int xs = game.node_graph[s];
      m.output[k][top.base[x]] = top.base[xs];
      m.update[k][top.base[xs]] = mem_of[s];
    } else {
      for (int s : game.succ[i]) m.update[k][top.base[game.node_graph[s]]] = mem_of[s];
    }
  }
  r.stats.emplace_back("machine_memory", mem_n);
  r.machine = std::move(m);
  return r;
}

}  // namespace unisynt
