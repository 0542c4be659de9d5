#include "unisynt/parity_game.hpp"

#include <algorithm>

#include "unisynt/common.hpp"

namespace unisynt {

namespace {

struct Solver {
  const ParityGame& g;
  std::vector<int> winner;
  std::vector<int> strategy;

  explicit Solver(const ParityGame& game)
      : g(game), winner(game.node_count(), 0), strategy(game.node_count(), -1) {}

  // Nodes of `alive` from which `player` can force a visit to `target`;
  // records the forcing move for player-owned attracted nodes. Target nodes
  // are included without a recorded move.
  std::vector<char> attractor(const std::vector<char>& alive, const std::vector<char>& target,
                              int player) {
    int n = g.node_count();
    std::vector<char> in(n, 0);
    std::vector<int> escape(n, 0);  // for opponent nodes: alive successors not yet in
    std::vector<int> todo;
    for (int v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      if (target[v]) {
        in[v] = 1;
        todo.push_back(v);
      } else if (g.owner[v] != player) {
        for (int w : g.succ[v])
          if (alive[w]) ++escape[v];
      }
    }
    std::vector<std::vector<int>> pred(n);
    for (int v = 0; v < n; ++v)
      if (alive[v])
        for (int w : g.succ[v])
          if (alive[w]) pred[w].push_back(v);

    while (!todo.empty()) {
      int v = todo.back();
      todo.pop_back();
      for (int p : pred[v]) {
        if (in[p]) continue;
        if (g.owner[p] == player) {
          in[p] = 1;
          strategy[p] = v;
          todo.push_back(p);
        } else if (--escape[p] == 0) {
          in[p] = 1;
          todo.push_back(p);
        }
      }
    }
    return in;
  }

  void solve(std::vector<char> alive) {
    int n = g.node_count();
    int d = -1;
    for (int v = 0; v < n; ++v)
      if (alive[v]) d = std::max(d, g.priority[v]);
    if (d < 0) return;  // empty subgame
    int player = d % 2 == 0 ? 1 : 2;
    int opponent = 3 - player;

    std::vector<char> top(n, 0);
    for (int v = 0; v < n; ++v)
      if (alive[v] && g.priority[v] == d) top[v] = 1;
    std::vector<char> a = attractor(alive, top, player);

    std::vector<char> rest = alive;
    for (int v = 0; v < n; ++v)
      if (a[v]) rest[v] = 0;
    solve(rest);

    bool opponent_wins_rest = false;
    for (int v = 0; v < n; ++v)
      if (rest[v] && winner[v] == opponent) opponent_wins_rest = true;

    if (!opponent_wins_rest) {
      // Whole subgame goes to `player`: attractor moves lead to the top
      // priority, recursive strategies cover the rest, top nodes owned by
      // `player` may pick any alive successor.
      for (int v = 0; v < n; ++v) {
        if (!alive[v]) continue;
        winner[v] = player;
        if (g.owner[v] != player) {
          strategy[v] = -1;
          continue;
        }
        if (a[v] && !top[v]) continue;          // attractor move already recorded
        if (rest[v]) continue;                   // recursive strategy kept
        for (int w : g.succ[v])
          if (alive[w]) {
            strategy[v] = w;
            break;
          }
      }
      return;
    }

    std::vector<char> opp_region(n, 0);
    for (int v = 0; v < n; ++v)
      if (rest[v] && winner[v] == opponent) opp_region[v] = 1;
    std::vector<char> b = attractor(alive, opp_region, opponent);

    std::vector<char> rest2 = alive;
    for (int v = 0; v < n; ++v)
      if (b[v]) rest2[v] = 0;
    solve(rest2);

    for (int v = 0; v < n; ++v) {
      if (!alive[v] || !b[v]) continue;
      winner[v] = opponent;
      if (g.owner[v] != opponent) {
        strategy[v] = -1;
        continue;
      }
      // opp_region nodes keep their recursive strategy; attracted nodes keep
      // the attractor move.
      if (!opp_region[v] && strategy[v] < 0)
        for (int w : g.succ[v])
          if (alive[w]) {
            strategy[v] = w;
            break;
          }
    }
  }
};

}  // namespace

GameSolution zielonka_solve(const ParityGame& g) {
  for (int v = 0; v < g.node_count(); ++v) {
    if (g.succ[v].empty()) throw UnisyntError("zielonka_solve: node without successor");
    if (g.priority[v] < 0) throw UnisyntError("zielonka_solve: negative priority");
  }
  Solver s(g);
  s.solve(std::vector<char>(g.node_count(), 1));
  return {std::move(s.winner), std::move(s.strategy)};
}

}  // namespace unisynt
