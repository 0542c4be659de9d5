#pragma once

#include <string>
#include <vector>

#include "unisynt/common.hpp"
#include "unisynt/lasso.hpp"

namespace unisynt {

// Directed labeled game graph. Arenas, strategy outcome products and powered
// information-tracking graphs all use this shape, so analyses written against
// it run on any of them.
//
// base[n] projects node n onto the underlying arena position (an index into
// base_ids). Invariant used throughout: two distinct successors of a node
// never share a base letter, so a step is determined by (node, base letter).
struct TrackedGraph {
  std::vector<std::string> ids;
  std::vector<int> owner;              // 1 or 2
  std::vector<Props> val;
  std::vector<std::vector<int>> succ;  // sorted, nonempty per node
  std::vector<int> base;
  std::vector<std::string> base_ids;
  int initial = 0;

  int node_count() const { return static_cast<int>(ids.size()); }
};

// Lasso-shaped path: stem then loop, loop nonempty, consecutive nodes are
// edges, loop.back() -> loop.front() is an edge, stem (if any) starts at
// whatever node the caller anchored it to.
struct GraphLasso {
  std::vector<int> stem;
  std::vector<int> loop;
};

// Word of node labels along the lasso.
LassoWord graph_lasso_word(const TrackedGraph& g, const GraphLasso& lasso);

// Base position ids along the lasso, for reporting.
std::vector<std::string> graph_lasso_base_ids(const TrackedGraph& g, const GraphLasso& lasso);

// Successor of n whose base letter is b, or -1.
int graph_step_base(const TrackedGraph& g, int n, int b);

// Checks ownership flags, edge targets, nonempty successor lists, initial in
// range; throws ValidationError.
void graph_validate(const TrackedGraph& g, const std::string& what);

// Ring graph spelling out the given word: one node per letter, ultimately
// periodic. Lets word acceptance reuse graph-product machinery.
TrackedGraph graph_ring(const LassoWord& w);

std::string graph_to_dot(const TrackedGraph& g, const std::string& name);

}  // namespace unisynt
