#include "unisynt/graph.hpp"

#include <algorithm>

namespace unisynt {

LassoWord graph_lasso_word(const TrackedGraph& g, const GraphLasso& lasso) {
  LassoWord w;
  for (int n : lasso.stem) w.stem.push_back(g.val[n]);
  for (int n : lasso.loop) w.loop.push_back(g.val[n]);
  return w;
}

std::vector<std::string> graph_lasso_base_ids(const TrackedGraph& g, const GraphLasso& lasso) {
  std::vector<std::string> out;
  for (int n : lasso.stem) out.push_back(g.base_ids[g.base[n]]);
  for (int n : lasso.loop) out.push_back(g.base_ids[g.base[n]]);
  return out;
}

int graph_step_base(const TrackedGraph& g, int n, int b) {
  for (int s : g.succ[n])
    if (g.base[s] == b) return s;
  return -1;
}

void graph_validate(const TrackedGraph& g, const std::string& what) {
  int n = g.node_count();
  if (n == 0) throw ValidationError(what + ": empty graph");
  if (static_cast<int>(g.owner.size()) != n || static_cast<int>(g.val.size()) != n ||
      static_cast<int>(g.succ.size()) != n || static_cast<int>(g.base.size()) != n)
    throw ValidationError(what + ": inconsistent node arrays");
  if (g.initial < 0 || g.initial >= n) throw ValidationError(what + ": initial out of range");
  for (int i = 0; i < n; ++i) {
    if (g.owner[i] != 1 && g.owner[i] != 2)
      throw ValidationError(what + ": node " + g.ids[i] + " has owner " + std::to_string(g.owner[i]));
    if (g.succ[i].empty())
      throw ValidationError(what + ": node " + g.ids[i] + " has no successor");
    for (int s : g.succ[i])
      if (s < 0 || s >= n) throw ValidationError(what + ": edge target out of range");
    if (!std::is_sorted(g.succ[i].begin(), g.succ[i].end()))
      throw ValidationError(what + ": successor list not sorted");
    if (g.base[i] < 0 || g.base[i] >= static_cast<int>(g.base_ids.size()))
      throw ValidationError(what + ": base index out of range");
  }
}

TrackedGraph graph_ring(const LassoWord& w) {
  TrackedGraph g;
  int s = static_cast<int>(w.stem.size());
  int l = static_cast<int>(w.loop.size());
  for (int i = 0; i < s + l; ++i) {
    g.ids.push_back("w" + std::to_string(i));
    g.owner.push_back(1);
    g.val.push_back(i < s ? w.stem[i] : w.loop[i - s]);
    g.base.push_back(i);
    g.base_ids.push_back(g.ids.back());
    g.succ.push_back({i + 1 < s + l ? i + 1 : s});
  }
  g.initial = 0;
  return g;
}

std::string graph_to_dot(const TrackedGraph& g, const std::string& name) {
  std::string out = "digraph " + name + " {\n";
  out += "  rankdir=LR;\n";
  for (int i = 0; i < g.node_count(); ++i) {
    out += "  n" + std::to_string(i) + " [shape=" +
           (g.owner[i] == 1 ? std::string("diamond") : std::string("box")) + ", label=\"" +
           g.ids[i] + " | " + props_format(g.val[i]) + "\"";
    if (i == g.initial) out += ", penwidth=2";
    out += "];\n";
  }
  for (int i = 0; i < g.node_count(); ++i)
    for (int s : g.succ[i])
      out += "  n" + std::to_string(i) + " -> n" + std::to_string(s) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace unisynt
