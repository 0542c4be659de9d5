#include "unisynt/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <tuple>
#include <utility>

#include "unisynt/buchi.hpp"
#include "unisynt/common.hpp"
#include "unisynt/graph.hpp"
#include "unisynt/infostate.hpp"

namespace unisynt {

namespace {

// Product of a plays graph with the final layer of an elimination tower,
// synchronized on base letters. Since each layer preserves every base edge
// and steps deterministically per base letter, every play of `plays` lifts
// uniquely; the lift carries the fresh propositions.
TrackedGraph lift_through(const TrackedGraph& plays, const Elimination& e) {
  const TrackedGraph& top = e.final_graph();
  if (plays.base[plays.initial] != top.base[top.initial])
    throw UnisyntError("internal: play universe and elimination disagree on the initial position");

  TrackedGraph g;
  g.base_ids = plays.base_ids;
  std::map<std::pair<int, int>, int> index;
  std::vector<std::pair<int, int>> nodes;
  auto intern = [&](int o, int x) {
    auto key = std::make_pair(o, x);
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(nodes.size());
    index.emplace(key, id);
    nodes.push_back(key);
    g.ids.push_back(plays.ids[o] + "&" + std::to_string(x));
    g.owner.push_back(plays.owner[o]);
    g.val.push_back(top.val[x]);
    g.base.push_back(plays.base[o]);
    return id;
  };
  g.initial = intern(plays.initial, top.initial);
  for (size_t i = 0; i < nodes.size(); ++i) {
    auto [o, x] = nodes[i];
    std::vector<int> out;
    for (int o2 : plays.succ[o]) {
      int x2 = graph_step_base(top, x, plays.base[o2]);
      if (x2 < 0) throw UnisyntError("internal: a play escapes the powered graph");
      out.push_back(intern(o2, x2));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    g.succ.push_back(std::move(out));
  }
  return g;
}

// First word position where the body of a G-shaped formula fails; 0 for
// other shapes. A violating index always exists within one stem+loop window
// because truth at positions past the stem is loop-periodic.
int blame_index(const TrackedGraph& g, const GraphLasso& lasso, const Formula& phi) {
  if (phi->op != FOp::Not || phi->lhs->op != FOp::Until || phi->lhs->lhs->op != FOp::True)
    return 0;
  Formula body = phi->lhs->rhs;
  Formula chi = body->op == FOp::Not ? body->lhs : f_not(body);
  LassoWord w = graph_lasso_word(g, lasso);
  int n = static_cast<int>(w.stem.size() + w.loop.size());
  for (int i = 0; i < n; ++i)
    if (!eval_ltl_lasso(chi, w, i)) return i;
  return 0;
}

// Emptiness + counterexample of "some play of g violates the R-free phi".
VerifyResult check_graph(const TrackedGraph& g, const Formula& phi) {
  VerifyResult r;
  auto witness = product_accepting_lasso(g, ltl_to_nba(f_not(phi)));
  if (!witness) return r;
  r.holds = false;
  for (int n : witness->stem) r.stem.push_back(g.base[n]);
  for (int n : witness->loop) r.loop.push_back(g.base[n]);
  r.index = blame_index(g, *witness, phi);
  return r;
}

}  // namespace

std::string verify_verdict_line(const Arena& a, const VerifyResult& r) {
  if (r.holds) return "HOLDS";
  std::string line = "FAILS ";
  for (int v : r.stem) line += a.ids[v] + " ";
  line += "(";
  for (size_t i = 0; i < r.loop.size(); ++i) {
    if (i) line += " ";
    line += a.ids[r.loop[i]];
  }
  line += ")^w @ " + std::to_string(r.index);
  return line;
}

VerifyResult check_fully_uniform(const Arena& a, const BoundTransducer& t, const Formula& phi,
                                 const StrategyMachine& m, long long cap) {
  Elimination e = eliminate_all(arena_graph(a), t, phi, cap);
  TrackedGraph out = outcome_product(a, m);
  return check_graph(lift_through(out, e), e.final_formula);
}

VerifyResult check_strictly_uniform(const Arena& a, const BoundTransducer& t, const Formula& phi,
                                    const StrategyMachine& m, long long cap) {
  Elimination e = eliminate_all(outcome_product(a, m), t, phi, cap);
  return check_graph(e.final_graph(), e.final_formula);
}

bool check_observation_based(const Arena& a,
                             const std::vector<std::pair<std::string, std::string>>& pairs,
                             const StrategyMachine& m) {
  std::vector<std::string> action = check_obs_shape(a);
  BoundTransducer t = obs_equiv_transducer(a, pairs);
  for (const auto& rule : t.rules)
    if (rule.in < 0 || rule.out < 0)
      throw ValidationError("observation check needs a letter-to-letter relation");
  TrackedGraph out = outcome_product(a, m);

  // The machine's action at a Player-1 node: the action proposition of its
  // unique move target.
  auto action_at = [&](int n) -> const std::string& {
    return action[out.base[out.succ[n][0]]];
  };

  std::set<std::tuple<int, int, int>> seen;
  std::vector<std::tuple<int, int, int>> todo;
  auto push = [&](int n1, int n2, int q) {
    auto key = std::make_tuple(n1, n2, q);
    if (seen.insert(key).second) todo.push_back(key);
  };
  int b0 = out.base[out.initial];
  for (int ri : t.rules_from[t.initial]) {
    const auto& rule = t.rules[ri];
    if (rule.in == b0 && rule.out == b0) push(out.initial, out.initial, rule.to);
  }
  for (size_t i = 0; i < todo.size(); ++i) {
    auto [n1, n2, q] = todo[i];
    if (t.final_state[q] && out.owner[n1] == 1 && out.owner[n2] == 1 &&
        action_at(n1) != action_at(n2))
      return false;
    for (int o1 : out.succ[n1])
      for (int o2 : out.succ[n2])
        for (int ri : t.rules_from[q]) {
          const auto& rule = t.rules[ri];
          if (rule.in == out.base[o1] && rule.out == out.base[o2]) push(o1, o2, rule.to);
        }
  }
  return true;
}

bool opacity_winning_direct(const Arena& a, const BoundTransducer& t, const StrategyMachine& m,
                            const std::vector<bool>& secret) {
  TrackedGraph base = arena_graph(a);
  TrackedGraph out = outcome_product(a, m);

  auto contained = [&](const InfoState& s) {
    for (int v : infostate_extract(t, s))
      if (!secret[v]) return false;
    return true;  // an empty information set counts as contained
  };

  std::map<std::pair<int, InfoState>, int> seen;
  std::vector<std::pair<int, InfoState>> todo;
  auto push = [&](int n, InfoState s) {
    auto key = std::make_pair(n, std::move(s));
    if (seen.emplace(key, 1).second) todo.push_back(key);
  };
  push(out.initial, infostate_step(t, base, initial_infostate(t, base), base.initial));
  for (size_t i = 0; i < todo.size(); ++i) {
    auto [n, s] = todo[i];
    if (contained(s)) return false;
    for (int o2 : out.succ[n]) push(o2, infostate_step(t, base, s, out.base[o2]));
    if (seen.size() > 2000000)
      throw ResourceLimitError("information-set search exceeded 2000000 states");
  }
  return true;
}

namespace {

// Canonical depth-first enumeration of machines: rows are decided lazily on
// the first reachable undecided slot, and a fresh memory value is always the
// smallest unused index, so machines differing only by memory renaming or by
// unreachable rows are produced once.
struct Enumerator {
  const Arena& a;
  int max_memory;
  long long guard;
  std::vector<std::vector<int>> update, output;
  int used = 1;
  long long steps = 0;
  std::vector<StrategyMachine> found;
  std::function<bool(const StrategyMachine&)> passes;

  struct Slot {
    bool is_output;
    int mem, pos;
  };

  Enumerator(const Arena& arena, int max_mem, long long g)
      : a(arena), max_memory(max_mem), guard(g) {
    int pos_n = static_cast<int>(arena.ids.size());
    update.assign(max_mem, std::vector<int>(pos_n, -1));
    output.assign(max_mem, std::vector<int>(pos_n, -1));
  }

  // First undecided slot reachable from (memory 0, initial), breadth-first.
  bool find_slot(Slot& slot) {
    std::set<std::pair<int, int>> seen;
    std::vector<std::pair<int, int>> queue;
    auto push = [&](int mem, int pos) {
      if (seen.insert({mem, pos}).second) queue.push_back({mem, pos});
    };
    push(0, a.initial);
    for (size_t i = 0; i < queue.size(); ++i) {
      auto [mem, pos] = queue[i];
      if (a.owner[pos] == 1) {
        int o = output[mem][pos];
        if (o < 0) {
          slot = {true, mem, pos};
          return true;
        }
        if (update[mem][o] < 0) {
          slot = {false, mem, o};
          return true;
        }
        push(update[mem][o], o);
      } else {
        for (int s : a.succ[pos]) {
          if (update[mem][s] < 0) {
            slot = {false, mem, s};
            return true;
          }
          push(update[mem][s], s);
        }
      }
    }
    return false;
  }

  StrategyMachine build() const {
    StrategyMachine m;
    m.name = "m" + std::to_string(found.size());
    m.mem_initial = 0;
    for (int k = 0; k < used; ++k) m.mem_ids.push_back("m" + std::to_string(k));
    m.update.assign(update.begin(), update.begin() + used);
    m.output.assign(output.begin(), output.begin() + used);
    return m;
  }

  void solve() {
    if (++steps > guard) throw ResourceLimitError("machine enumeration guard exceeded");
    Slot slot;
    if (!find_slot(slot)) {
      StrategyMachine m = build();
      if (passes(m)) found.push_back(std::move(m));
      return;
    }
    if (slot.is_output) {
      for (int s : a.succ[slot.pos]) {
        output[slot.mem][slot.pos] = s;
        solve();
      }
      output[slot.mem][slot.pos] = -1;
    } else {
      int top = used < max_memory ? used : used - 1;
      for (int v = 0; v <= top; ++v) {
        update[slot.mem][slot.pos] = v;
        if (v == used) {
          ++used;
          solve();
          --used;
        } else {
          solve();
        }
      }
      update[slot.mem][slot.pos] = -1;
    }
  }
};

}  // namespace

std::vector<StrategyMachine> enumerate_and_verify(const Arena& a, const BoundTransducer& t,
                                                  const Formula& phi, UniformityMode mode,
                                                  int max_memory, long long cap,
                                                  long long guard) {
  if (max_memory < 1) throw ValidationError("memory bound must be at least 1");
  Enumerator en(a, max_memory, guard);
  if (mode == UniformityMode::kFully) {
    // The elimination tower and the negated automaton depend only on the
    // arena, so they are shared across all candidate machines.
    Elimination e = eliminate_all(arena_graph(a), t, phi, cap);
    BuchiAutomaton neg = ltl_to_nba(f_not(e.final_formula));
    en.passes = [&, e = std::move(e), neg = std::move(neg)](const StrategyMachine& m) {
      return product_empty(lift_through(outcome_product(a, m), e), neg);
    };
  } else {
    en.passes = [&](const StrategyMachine& m) {
      return check_strictly_uniform(a, t, phi, m, cap).holds;
    };
  }
  en.solve();
  return std::move(en.found);
}

}  // namespace unisynt
