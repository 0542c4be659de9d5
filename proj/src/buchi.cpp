#include "unisynt/buchi.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace unisynt {

bool BuchiAutomaton::in_f(int a, int k) const {
  if (u_bit.empty()) return true;
  return !((a >> u_bit[k]) & 1) || u_rhs_val[k][a];
}

bool BuchiAutomaton::is_initial(int s) const {
  return state_counter(s) == 0 && init_ok[state_assignment(s)];
}

bool BuchiAutomaton::is_accepting(int s) const {
  return state_counter(s) == 0 && in_f(state_assignment(s), 0);
}

int BuchiAutomaton::next_counter(int a, int k) const {
  return in_f(a, k) ? (k + 1) % K : k;
}

bool BuchiAutomaton::assignment_edge(int a, int a2) const {
  for (size_t x = 0; x < x_bit.size(); ++x)
    if (((a >> x_bit[x]) & 1) != x_arg_val[x][a2]) return false;
  for (size_t u = 0; u < u_bit.size(); ++u) {
    bool now = (a >> u_bit[u]) & 1;
    bool expanded = u_rhs_val[u][a] || (u_lhs_val[u][a] && ((a2 >> u_bit[u]) & 1));
    if (now != expanded) return false;
  }
  return true;
}

bool BuchiAutomaton::edge(int s, int s2) const {
  int a = state_assignment(s), k = state_counter(s);
  return state_counter(s2) == next_counter(a, k) && assignment_edge(a, state_assignment(s2));
}

namespace {

void collect_basis(const Formula& f, std::vector<Formula>& xs, std::vector<Formula>& us) {
  if (!f) return;
  collect_basis(f->lhs, xs, us);
  collect_basis(f->rhs, xs, us);
  auto add = [](std::vector<Formula>& list, const Formula& g) {
    for (const auto& seen : list)
      if (f_equal(seen, g)) return;
    list.push_back(g);
  };
  if (f->op == FOp::Next) add(xs, f);
  if (f->op == FOp::Until) add(us, f);
}

// Truth table of f over all basis assignments. Basis members (atoms, X, U)
// read their own bit; boolean structure is evaluated on top.
struct TableBuilder {
  const std::vector<std::string>& atoms;
  const std::vector<Formula>& xs;
  const std::vector<Formula>& us;
  int bits;
  std::map<const FormulaNode*, std::vector<char>> memo;

  int basis_bit(const Formula& f) const {
    int a = static_cast<int>(atoms.size());
    if (f->op == FOp::Atom) {
      auto it = std::lower_bound(atoms.begin(), atoms.end(), f->atom);
      return static_cast<int>(it - atoms.begin());
    }
    if (f->op == FOp::Next) {
      for (size_t i = 0; i < xs.size(); ++i)
        if (f_equal(xs[i], f)) return a + static_cast<int>(i);
    }
    if (f->op == FOp::Until) {
      for (size_t i = 0; i < us.size(); ++i)
        if (f_equal(us[i], f)) return a + static_cast<int>(xs.size()) + static_cast<int>(i);
    }
    return -1;
  }

  const std::vector<char>& table(const Formula& f) {
    auto it = memo.find(f.get());
    if (it != memo.end()) return it->second;
    int n = 1 << bits;
    std::vector<char> t(n);
    int bit = basis_bit(f);
    if (bit >= 0) {
      for (int a = 0; a < n; ++a) t[a] = (a >> bit) & 1;
    } else {
      switch (f->op) {
        case FOp::True:
          std::fill(t.begin(), t.end(), 1);
          break;
        case FOp::Not: {
          const auto& s = table(f->lhs);
          for (int a = 0; a < n; ++a) t[a] = !s[a];
          break;
        }
        case FOp::And: {
          const auto& l = table(f->lhs);
          const auto& r = table(f->rhs);
          for (int a = 0; a < n; ++a) t[a] = l[a] && r[a];
          break;
        }
        default:
          throw UnisyntError("ltl_to_nba: internal basis lookup failure");
      }
    }
    return memo.emplace(f.get(), std::move(t)).first->second;
  }
};

}  // namespace

BuchiAutomaton ltl_to_nba(const Formula& f) {
  if (r_depth(f) != 0) throw UnisyntError("ltl_to_nba: formula contains R");
  BuchiAutomaton nba;
  nba.atoms = formula_atoms(f);
  std::vector<Formula> xs, us;
  collect_basis(f, xs, us);
  nba.bits = nba.atom_count() + static_cast<int>(xs.size() + us.size());
  if (nba.bits > 14)
    throw ResourceLimitError("ltl_to_nba: formula basis has " + std::to_string(nba.bits) +
                             " members (limit 14)");
  nba.K = std::max<int>(1, static_cast<int>(us.size()));

  TableBuilder tb{nba.atoms, xs, us, nba.bits, {}};
  nba.init_ok = tb.table(f);
  for (size_t i = 0; i < xs.size(); ++i) {
    nba.x_bit.push_back(tb.basis_bit(xs[i]));
    nba.x_arg_val.push_back(tb.table(xs[i]->lhs));
  }
  for (size_t i = 0; i < us.size(); ++i) {
    nba.u_bit.push_back(tb.basis_bit(us[i]));
    nba.u_lhs_val.push_back(tb.table(us[i]->lhs));
    nba.u_rhs_val.push_back(tb.table(us[i]->rhs));
  }
  return nba;
}

uint32_t props_letter(const std::vector<std::string>& atoms, const Props& ps) {
  uint32_t out = 0;
  for (size_t i = 0; i < atoms.size(); ++i)
    if (props_contains(ps, atoms[i])) out |= 1u << i;
  return out;
}

// ------------------------------------------------------------ product core

namespace {

// Reachable product of graph nodes with automaton states (letters matched on
// the target node). Nodes are explored from the given seeds.
struct Product {
  const TrackedGraph& g;
  const BuchiAutomaton& nba;
  std::vector<std::vector<int>> letter_assignments;  // per letter, matching assignments
  std::map<std::pair<int, int>, int> index;          // (node, nba state) -> product id
  std::vector<std::pair<int, int>> nodes;
  std::vector<std::vector<int>> succ;
  std::vector<uint32_t> node_letter;                 // graph node -> letter bits

  Product(const TrackedGraph& graph, const BuchiAutomaton& automaton)
      : g(graph), nba(automaton) {
    letter_assignments.resize(1u << nba.atom_count());
    for (int a = 0; a < nba.assignments(); ++a)
      letter_assignments[nba.assignment_letter(a)].push_back(a);
    node_letter.resize(g.node_count());
    for (int n = 0; n < g.node_count(); ++n)
      node_letter[n] = props_letter(nba.atoms, g.val[n]);
  }

  int intern(int node, int state) {
    auto it = index.find({node, state});
    if (it != index.end()) return it->second;
    int id = static_cast<int>(nodes.size());
    if (id >= 2000000)
      throw ResourceLimitError("graph-automaton product exceeds 2000000 states");
    index.emplace(std::make_pair(node, state), id);
    nodes.emplace_back(node, state);
    succ.emplace_back();
    return id;
  }

  // Seeds (node, initial-matching state) for every listed graph node.
  std::vector<int> seed(const std::vector<int>& start_nodes) {
    std::vector<int> seeds;
    for (int n : start_nodes)
      for (int a : letter_assignments[node_letter[n]])
        if (nba.init_ok[a]) seeds.push_back(intern(n, a * nba.K));
    explore();
    return seeds;
  }

  void explore() {
    for (size_t head = 0; head < nodes.size(); ++head) {
      auto [n, s] = nodes[head];
      int a = nba.state_assignment(s);
      int k2 = nba.next_counter(a, nba.state_counter(s));
      for (int n2 : g.succ[n])
        for (int a2 : letter_assignments[node_letter[n2]])
          if (nba.assignment_edge(a, a2)) {
            int target = intern(n2, a2 * nba.K + k2);  // may grow succ
            succ[head].push_back(target);
          }
    }
  }

  // Tarjan SCC ids, iterative.
  std::vector<int> scc_ids() const {
    int n = static_cast<int>(nodes.size());
    std::vector<int> ids(n, -1), low(n), num(n, -1), stack;
    std::vector<char> on_stack(n, 0);
    int counter = 0, comp = 0;
    for (int root = 0; root < n; ++root) {
      if (num[root] >= 0) continue;
      std::vector<std::pair<int, size_t>> call = {{root, 0}};
      while (!call.empty()) {
        auto& [v, edge_i] = call.back();
        if (edge_i == 0) {
          num[v] = low[v] = counter++;
          stack.push_back(v);
          on_stack[v] = 1;
        }
        if (edge_i < succ[v].size()) {
          int w = succ[v][edge_i++];
          if (num[w] < 0)
            call.emplace_back(w, 0);
          else if (on_stack[w])
            low[v] = std::min(low[v], num[w]);
        } else {
          if (low[v] == num[v]) {
            while (true) {
              int w = stack.back();
              stack.pop_back();
              on_stack[w] = 0;
              ids[w] = comp;
              if (w == v) break;
            }
            ++comp;
          }
          int v_done = v;
          call.pop_back();
          if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[v_done]);
        }
      }
    }
    return ids;
  }

  // True for product states that can reach a cycle through an accepting state.
  std::vector<char> reaches_accepting_cycle() const {
    std::vector<int> scc = scc_ids();
    int n = static_cast<int>(nodes.size());
    std::vector<char> scc_nontrivial(n, 0), good(n, 0);
    std::vector<int> scc_size(n, 0);
    for (int v = 0; v < n; ++v) ++scc_size[scc[v]];
    for (int v = 0; v < n; ++v)
      for (int w : succ[v])
        if (scc[v] == scc[w] && (scc_size[scc[v]] > 1 || v == w)) scc_nontrivial[scc[v]] = 1;
    std::vector<char> target(n, 0);
    for (int v = 0; v < n; ++v)
      if (scc_nontrivial[scc[v]] && nba.is_accepting(nodes[v].second)) {
        // Whole SCC can reach the cycle through v.
        target[v] = 1;
      }
    // Backward closure over the product graph.
    std::vector<std::vector<int>> pred(n);
    for (int v = 0; v < n; ++v)
      for (int w : succ[v]) pred[w].push_back(v);
    std::queue<int> todo;
    for (int v = 0; v < n; ++v)
      if (target[v]) {
        good[v] = 1;
        todo.push(v);
      }
    while (!todo.empty()) {
      int v = todo.front();
      todo.pop();
      for (int p : pred[v])
        if (!good[p]) {
          good[p] = 1;
          todo.push(p);
        }
    }
    return good;
  }
};

}  // namespace

std::optional<GraphLasso> product_accepting_lasso(const TrackedGraph& g,
                                                  const BuchiAutomaton& nba) {
  Product p(g, nba);
  std::vector<int> seeds = p.seed({g.initial});
  if (seeds.empty()) return std::nullopt;
  std::vector<int> scc = p.scc_ids();
  std::vector<int> scc_size(p.nodes.size(), 0);
  for (size_t v = 0; v < p.nodes.size(); ++v) ++scc_size[scc[v]];
  std::vector<char> nontrivial(p.nodes.size(), 0);
  for (size_t v = 0; v < p.nodes.size(); ++v)
    for (int w : p.succ[v])
      if (scc[v] == scc[w] && (scc_size[scc[v]] > 1 || static_cast<int>(v) == w))
        nontrivial[scc[v]] = 1;

  int witness = -1;
  for (size_t v = 0; v < p.nodes.size(); ++v)
    if (nontrivial[scc[v]] && nba.is_accepting(p.nodes[v].second)) {
      witness = static_cast<int>(v);
      break;
    }
  if (witness < 0) return std::nullopt;

  // Stem: shortest path from some seed. All seeds share the same graph node
  // (the initial), so BFS from all of them at once via a virtual source.
  std::vector<int> parent(p.nodes.size(), -2);
  std::queue<int> todo;
  for (int s : seeds)
    if (parent[s] == -2) {
      parent[s] = -1;
      todo.push(s);
    }
  while (!todo.empty() && parent[witness] == -2) {
    int v = todo.front();
    todo.pop();
    for (int w : p.succ[v])
      if (parent[w] == -2) {
        parent[w] = v;
        todo.push(w);
      }
  }
  if (parent[witness] == -2) return std::nullopt;  // accepting cycle unreachable from init
  std::vector<int> stem;
  for (int v = witness; v != -1; v = parent[v]) stem.push_back(v);
  std::reverse(stem.begin(), stem.end());

  // Cycle: proper path witness -> witness inside the product.
  std::vector<int> parent2(p.nodes.size(), -2);
  std::queue<int> todo2;
  for (int w : p.succ[witness])
    if (parent2[w] == -2) {
      parent2[w] = -1;
      todo2.push(w);
    }
  while (!todo2.empty() && parent2[witness] == -2) {
    int v = todo2.front();
    todo2.pop();
    for (int w : p.succ[v])
      if (parent2[w] == -2) {
        parent2[w] = v;
        todo2.push(w);
      }
  }
  std::vector<int> cycle;
  for (int v = witness; v != -1; v = parent2[v]) {
    cycle.push_back(v);
    if (v == witness && cycle.size() > 1) break;
  }
  // cycle currently [witness, ..., first-after-witness]; reverse to start at
  // the successor and end at witness, then rotate witness to the front.
  std::reverse(cycle.begin(), cycle.end());
  // now cycle = [x1, ..., witness] where witness -> x1 is an edge.
  cycle.pop_back();
  cycle.insert(cycle.begin(), witness);

  GraphLasso out;
  for (size_t i = 0; i + 1 < stem.size(); ++i) out.stem.push_back(p.nodes[stem[i]].first);
  for (int v : cycle) out.loop.push_back(p.nodes[v].first);
  return out;
}

bool product_empty(const TrackedGraph& g, const BuchiAutomaton& nba) {
  return !product_accepting_lasso(g, nba).has_value();
}

bool nba_accepts_lasso(const BuchiAutomaton& nba, const LassoWord& w) {
  return !product_empty(graph_ring(w), nba);
}

std::vector<bool> universal_nodes(const TrackedGraph& g, const Formula& psi) {
  BuchiAutomaton nba = ltl_to_nba(f_not(psi));
  Product p(g, nba);
  std::vector<int> all(g.node_count());
  for (int i = 0; i < g.node_count(); ++i) all[i] = i;
  p.seed(all);
  std::vector<char> bad = p.reaches_accepting_cycle();
  std::vector<bool> out(g.node_count(), true);
  for (size_t v = 0; v < p.nodes.size(); ++v) {
    auto [n, s] = p.nodes[v];
    if (nba.is_initial(s) && bad[v]) out[n] = false;
  }
  return out;
}

ExplicitNba nba_explicit(const BuchiAutomaton& nba) {
  ExplicitNba out;
  out.atoms = nba.atoms;
  out.letters = 1 << nba.atom_count();
  std::vector<std::vector<int>> letter_assignments(out.letters);
  for (int a = 0; a < nba.assignments(); ++a)
    letter_assignments[nba.assignment_letter(a)].push_back(a);

  std::map<int, int> id;  // nba state -> explicit id (0 reserved)
  std::vector<int> order;
  out.accepting.push_back(false);
  out.delta.emplace_back(out.letters);
  auto intern = [&](int s) {
    auto it = id.find(s);
    if (it != id.end()) return it->second;
    int e = static_cast<int>(out.accepting.size());
    id.emplace(s, e);
    out.accepting.push_back(nba.is_accepting(s));
    out.delta.emplace_back(out.letters);
    order.push_back(s);
    return e;
  };

  for (int letter = 0; letter < out.letters; ++letter)
    for (int a : letter_assignments[letter])
      if (nba.init_ok[a]) {
        int target = intern(a * nba.K);  // may grow out.delta
        out.delta[0][letter].push_back(target);
      }

  for (size_t head = 0; head < order.size(); ++head) {
    int s = order[head];
    int e = id.at(s);
    int a = nba.state_assignment(s);
    int k2 = nba.next_counter(a, nba.state_counter(s));
    for (int letter = 0; letter < out.letters; ++letter)
      for (int a2 : letter_assignments[letter])
        if (nba.assignment_edge(a, a2)) {
          int target = intern(a2 * nba.K + k2);  // may grow out.delta
          out.delta[e][letter].push_back(target);
        }
    if (out.state_count() > 60000)
      throw ResourceLimitError("nba_explicit: automaton exceeds 60000 states");
  }
  for (auto& per_state : out.delta)
    for (auto& list : per_state) std::sort(list.begin(), list.end());
  return out;
}

}  // namespace unisynt
