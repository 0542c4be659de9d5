#include "unisynt/dpa.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace unisynt {

int DetParityAutomaton::max_priority() const {
  int m = 0;
  for (int p : priority) m = std::max(m, p);
  return m;
}

namespace {

// ------------------------------------------------------------- Safra trees

struct STNode {
  int name = 0;
  std::vector<int> label;  // sorted NBA states, nonempty in canonical trees
  bool marked = false;
  std::vector<STNode> children;  // oldest first
};

// Empty tree <-> !root.has_value, encoded as empty label at the root slot.
struct SafraTree {
  bool empty = true;
  STNode root;
};

void serialize_node(const STNode& n, std::vector<int>& out) {
  out.push_back(n.name);
  out.push_back(n.marked ? 1 : 0);
  out.push_back(static_cast<int>(n.label.size()));
  for (int s : n.label) out.push_back(s);
  out.push_back(static_cast<int>(n.children.size()));
  for (const auto& c : n.children) serialize_node(c, out);
}

std::vector<int> serialize(const SafraTree& t) {
  std::vector<int> out;
  out.push_back(t.empty ? 0 : 1);
  if (!t.empty) serialize_node(t.root, out);
  return out;
}

void collect_names(const STNode& n, std::set<int>& names) {
  names.insert(n.name);
  for (const auto& c : n.children) collect_names(c, names);
}

int fresh_name(std::set<int>& used) {
  int name = 1;
  while (used.count(name)) ++name;
  used.insert(name);
  return name;
}

struct SafraOps {
  const ExplicitNba& nba;

  std::vector<int> powerset_step(const std::vector<int>& states, int letter) const {
    std::set<int> out;
    for (int s : states) out.insert(nba.delta[s][letter].begin(), nba.delta[s][letter].end());
    return std::vector<int>(out.begin(), out.end());
  }

  std::vector<int> accepting_part(const std::vector<int>& states) const {
    std::vector<int> out;
    for (int s : states)
      if (nba.accepting[s]) out.push_back(s);
    return out;
  }

  void unmark_and_update(STNode& n, int letter) const {
    n.marked = false;
    n.label = powerset_step(n.label, letter);
    for (auto& c : n.children) unmark_and_update(c, letter);
  }

  // Preorder: reserve the smallest free name at each node holding accepting
  // states, append the new youngest child after the existing children.
  void spawn(STNode& n, std::set<int>& used) const {
    std::vector<int> acc = accepting_part(n.label);
    int name = acc.empty() ? 0 : fresh_name(used);
    size_t existing = n.children.size();
    for (size_t i = 0; i < existing; ++i) spawn(n.children[i], used);
    if (!acc.empty()) {
      STNode child;
      child.name = name;
      child.label = std::move(acc);
      n.children.push_back(std::move(child));
    }
  }

  static void subtract_subtree(STNode& n, const std::set<int>& remove) {
    std::vector<int> kept;
    for (int s : n.label)
      if (!remove.count(s)) kept.push_back(s);
    n.label = std::move(kept);
    for (auto& c : n.children) subtract_subtree(c, remove);
  }

  // Keep each state only in the oldest sibling containing it.
  static void horizontal_merge(STNode& n) {
    std::set<int> seen;
    for (auto& c : n.children) {
      subtract_subtree(c, seen);
      seen.insert(c.label.begin(), c.label.end());
    }
    for (auto& c : n.children) horizontal_merge(c);
  }

  static void remove_empty(STNode& n) {
    std::vector<STNode> kept;
    for (auto& c : n.children) {
      if (c.label.empty()) continue;
      remove_empty(c);
      kept.push_back(std::move(c));
    }
    n.children = std::move(kept);
  }

  // Mark nodes whose children jointly carry the whole label, dropping the
  // then-redundant descendants.
  static void vertical_merge(STNode& n) {
    size_t child_total = 0;
    for (const auto& c : n.children) child_total += c.label.size();
    if (!n.children.empty() && child_total == n.label.size()) {
      n.children.clear();
      n.marked = true;
      return;
    }
    for (auto& c : n.children) vertical_merge(c);
  }

  SafraTree step(const SafraTree& t, int letter) const {
    if (t.empty) return t;
    SafraTree out;
    out.empty = false;
    out.root = t.root;
    unmark_and_update(out.root, letter);
    std::set<int> used;
    collect_names(out.root, used);
    spawn(out.root, used);
    horizontal_merge(out.root);
    remove_empty(out.root);
    if (out.root.label.empty()) return SafraTree{};
    vertical_merge(out.root);
    return out;
  }
};

void collect_marked(const STNode& n, std::set<int>& out) {
  if (n.marked) out.insert(n.name);
  for (const auto& c : n.children) collect_marked(c, out);
}

// -------------------------------------------------- Rabin-to-parity record

struct DraExploration {
  std::vector<SafraTree> trees;
  std::vector<std::vector<int>> delta;  // [tree][letter]
  std::vector<std::set<int>> marked;    // names marked in the tree
  std::vector<std::set<int>> present;   // names present in the tree
};

DraExploration explore_dra(const ExplicitNba& nba) {
  SafraOps ops{nba};
  DraExploration out;
  std::map<std::vector<int>, int> index;

  SafraTree init;
  init.empty = false;
  init.root.name = 1;
  init.root.label = {0};
  auto intern = [&](const SafraTree& t) {
    std::vector<int> key = serialize(t);
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(out.trees.size());
    if (id >= 200000) throw ResourceLimitError("determinization exceeds 200000 Safra trees");
    index.emplace(std::move(key), id);
    out.trees.push_back(t);
    out.delta.emplace_back(nba.letters, -1);
    std::set<int> m, p;
    if (!t.empty) {
      collect_marked(t.root, m);
      collect_names(t.root, p);
    }
    out.marked.push_back(std::move(m));
    out.present.push_back(std::move(p));
    return id;
  };

  intern(init);
  for (size_t head = 0; head < out.trees.size(); ++head)
    for (int letter = 0; letter < nba.letters; ++letter) {
      SafraTree next = ops.step(out.trees[head], letter);
      out.delta[head][letter] = intern(next);
    }
  return out;
}

}  // namespace

DetParityAutomaton determinize_to_parity(const BuchiAutomaton& source) {
  ExplicitNba nba = nba_explicit(source);
  DraExploration dra = explore_dra(nba);

  // Names that are marked in some reachable tree; each carries a Rabin pair
  // (G = marked, B = absent).
  std::set<int> kept_set;
  for (const auto& m : dra.marked) kept_set.insert(m.begin(), m.end());
  std::vector<int> kept(kept_set.begin(), kept_set.end());
  int pairs = static_cast<int>(kept.size());

  // Appearance-record state: (tree, permutation of pair indices, priority of
  // the transition that entered it). Recently-bad pairs live at the front;
  // the deepest hit decides the priority, bad beating good at equal depth.
  DetParityAutomaton dpa;
  dpa.atoms = nba.atoms;
  dpa.letters = nba.letters;

  struct IarState {
    int tree;
    std::vector<int> perm;  // pair indices, front first
    int prio;
  };
  std::map<std::pair<std::pair<int, std::vector<int>>, int>, int> index;
  std::vector<IarState> states;

  auto intern = [&](IarState s) {
    auto key = std::make_pair(std::make_pair(s.tree, s.perm), s.prio);
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(states.size());
    if (id >= 400000) throw ResourceLimitError("parity automaton exceeds 400000 states");
    index.emplace(std::move(key), id);
    states.push_back(std::move(s));
    dpa.delta.emplace_back(dpa.letters, -1);
    dpa.priority.push_back(states.back().prio);
    return id;
  };

  IarState init;
  init.tree = 0;
  for (int i = 0; i < pairs; ++i) init.perm.push_back(i);
  init.prio = 1;
  dpa.initial = intern(init);

  for (size_t head = 0; head < states.size(); ++head)
    for (int letter = 0; letter < dpa.letters; ++letter) {
      IarState cur = states[head];  // copy: states may reallocate below
      int tree2 = dra.delta[cur.tree][letter];
      int deepest_bad = 0, deepest_good = 0;
      std::vector<int> moved, rest;
      for (int pos = 1; pos <= pairs; ++pos) {
        int pair = cur.perm[pos - 1];
        bool bad = !dra.present[tree2].count(kept[pair]);
        bool good = dra.marked[tree2].count(kept[pair]) > 0;
        if (bad) {
          deepest_bad = pos;
          moved.push_back(pair);
        } else {
          rest.push_back(pair);
          if (good) deepest_good = pos;
        }
      }
      IarState next;
      next.tree = tree2;
      next.perm = std::move(moved);
      next.perm.insert(next.perm.end(), rest.begin(), rest.end());
      next.prio = 1;
      if (deepest_bad > 0) next.prio = std::max(next.prio, 2 * deepest_bad + 1);
      if (deepest_good > 0) next.prio = std::max(next.prio, 2 * deepest_good);
      dpa.delta[head][letter] = intern(std::move(next));
    }

  // Monotone, parity-preserving compression of the priority range.
  std::set<int> used(dpa.priority.begin(), dpa.priority.end());
  std::map<int, int> remap;
  int prev_old = -1, prev_new = 0;
  for (int p : used) {
    int next = prev_old >= 0 && (prev_old % 2) == (p % 2) ? prev_new
               : prev_new == 0                            ? (p % 2 ? 1 : 2)
                                                          : prev_new + 1;
    remap[p] = next;
    prev_old = p;
    prev_new = next;
  }
  for (int& p : dpa.priority) p = remap[p];

  if (dpa.max_priority() > 2 * source.state_count() + 2)
    throw UnisyntError("determinize_to_parity: priority bound exceeded");
  return dpa;
}

bool dpa_accepts_lasso(const DetParityAutomaton& dpa, const LassoWord& w) {
  int d = dpa.initial;
  for (const auto& letter : w.stem) d = dpa.delta[d][props_letter(dpa.atoms, letter)];
  int loop_len = static_cast<int>(w.loop.size());
  std::map<std::pair<int, int>, int> seen;  // (loop index, state) -> step
  std::vector<int> entered;                 // priority entered at step i
  int pos = 0;
  while (true) {
    auto key = std::make_pair(pos, d);
    auto it = seen.find(key);
    if (it != seen.end()) {
      int max_prio = 0;
      for (size_t i = it->second; i < entered.size(); ++i)
        max_prio = std::max(max_prio, entered[i]);
      return max_prio % 2 == 0;
    }
    seen.emplace(key, static_cast<int>(entered.size()));
    d = dpa.delta[d][props_letter(dpa.atoms, w.loop[pos])];
    entered.push_back(dpa.priority[d]);
    pos = (pos + 1) % loop_len;
  }
}

}  // namespace unisynt
