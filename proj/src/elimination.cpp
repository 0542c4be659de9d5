#include "unisynt/elimination.hpp"

#include <algorithm>
#include <map>

namespace unisynt {

std::vector<bool> universal_positions(const TrackedGraph& g, const Formula& phi) {
  return universal_nodes(g, phi);
}

unsigned long long elimination_round_bound(int nodes, int states) {
  unsigned long long exponent =
      static_cast<unsigned long long>(states) * (static_cast<unsigned long long>(nodes) + 1);
  if (exponent >= 63) return ~0ull;
  unsigned long long power = 1ull << exponent;
  unsigned long long bound = static_cast<unsigned long long>(nodes) * power;
  if (bound / power != static_cast<unsigned long long>(nodes)) return ~0ull;
  return bound;
}

namespace {

std::string infostate_id(const InfoState& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(s[i].first) + ":" + std::to_string(s[i].second);
  }
  return out + "}";
}

}  // namespace

Layer eliminate_innermost(const TrackedGraph& current, const BoundTransducer& t,
                          const Formula& phi, Formula& phi_out, int& fresh_counter,
                          long long cap) {
  std::vector<Formula> inner = innermost_r_subformulas(phi);

  // Universal sets of the arguments, over the current layer.
  std::vector<std::vector<bool>> universal;
  std::vector<std::string> fresh;
  for (const auto& rsub : inner) {
    universal.push_back(universal_positions(current, rsub->lhs));
    fresh.push_back("@R" + std::to_string(fresh_counter++));
  }

  Layer layer;
  layer.fresh_atoms = fresh;
  layer.replaced = inner;
  TrackedGraph& g = layer.graph;
  g.base_ids = current.base_ids;

  std::map<std::pair<int, InfoState>, int> index;
  std::vector<std::pair<int, InfoState>> nodes;
  unsigned long long bound = elimination_round_bound(current.node_count(), t.state_count());

  auto intern = [&](int u, InfoState s) {
    auto key = std::make_pair(u, std::move(s));
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(nodes.size());
    if (static_cast<long long>(id) >= cap)
      throw ResourceLimitError("powered arena exceeds the configured cap of " +
                               std::to_string(cap) + " positions");
    if (static_cast<unsigned long long>(id) >= bound)
      throw UnisyntError("eliminate_innermost: internal growth-bound violation");
    Props val = current.val[u];
    std::vector<int> ext = infostate_extract(t, key.second);
    for (size_t k = 0; k < inner.size(); ++k) {
      bool contained = true;
      for (int x : ext)
        if (!universal[k][x]) {
          contained = false;
          break;
        }
      if (contained) val = props_union(val, {fresh[k]});
    }
    g.ids.push_back(current.ids[u] + "|" + infostate_id(key.second));
    g.owner.push_back(current.owner[u]);
    g.val.push_back(std::move(val));
    g.base.push_back(current.base[u]);
    g.succ.emplace_back();
    layer.proj.push_back(u);
    layer.info.push_back(key.second);
    nodes.push_back(key);
    index.emplace(std::move(key), id);
    return id;
  };

  InfoState s0 = infostate_step(t, current, initial_infostate(t, current), current.initial);
  g.initial = intern(current.initial, std::move(s0));
  for (size_t head = 0; head < nodes.size(); ++head) {
    auto [u, s] = nodes[head];
    for (int u2 : current.succ[u]) {
      int v = intern(u2, infostate_step(t, current, s, u2));
      g.succ[head].push_back(v);
    }
    std::sort(g.succ[head].begin(), g.succ[head].end());
    g.succ[head].erase(std::unique(g.succ[head].begin(), g.succ[head].end()), g.succ[head].end());
  }

  std::vector<std::pair<Formula, Formula>> subs;
  for (size_t k = 0; k < inner.size(); ++k) subs.emplace_back(inner[k], f_atom(fresh[k]));
  phi_out = replace_subformulas(phi, subs);
  return layer;
}

Elimination eliminate_all(const TrackedGraph& base, const BoundTransducer& t, const Formula& phi,
                          long long cap) {
  Elimination e;
  e.base = base;
  Formula current_phi = phi;
  int fresh_counter = 1;
  int rounds = r_depth(phi);
  for (int round = 0; round < rounds; ++round) {
    const TrackedGraph& current = e.layers.empty() ? e.base : e.layers.back().graph;
    Formula next_phi;
    e.layers.push_back(eliminate_innermost(current, t, current_phi, next_phi, fresh_counter, cap));
    current_phi = next_phi;
  }
  if (r_depth(current_phi) != 0)
    throw UnisyntError("eliminate_all: R remains after all rounds");
  e.final_formula = current_phi;
  return e;
}

std::vector<int> trace_back_play(const Elimination& e, const std::vector<int>& final_nodes) {
  std::vector<int> nodes = final_nodes;
  for (auto it = e.layers.rbegin(); it != e.layers.rend(); ++it)
    for (int& n : nodes) n = it->proj[n];
  return nodes;
}

std::string elimination_dump(const Elimination& e, const BoundTransducer& t) {
  std::string out;
  out += "base: " + std::to_string(e.base.node_count()) + " positions\n";
  for (size_t k = 0; k < e.layers.size(); ++k) {
    const Layer& layer = e.layers[k];
    out += "layer " + std::to_string(k + 1) + ": " + std::to_string(layer.graph.node_count()) +
           " positions\n";
    for (size_t j = 0; j < layer.fresh_atoms.size(); ++j)
      out += "  " + layer.fresh_atoms[j] + " := " + format_formula(layer.replaced[j]) + "\n";
    const TrackedGraph& below = k == 0 ? e.base : e.layers[k - 1].graph;
    for (int n = 0; n < layer.graph.node_count(); ++n)
      out += "  " + layer.graph.ids[n] + " owner=" + std::to_string(layer.graph.owner[n]) +
             " props=" + props_format(layer.graph.val[n]) + " info=" +
             infostate_format(t, below, layer.info[n]) + "\n";
  }
  out += "formula: " + format_formula(e.final_formula) + "\n";
  return out;
}

}  // namespace unisynt
