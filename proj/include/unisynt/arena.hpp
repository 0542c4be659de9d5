#pragma once

#include <string>
#include <vector>

#include "unisynt/common.hpp"
#include "unisynt/graph.hpp"

namespace unisynt {

// Two-player turn-based arena: finite, bipartite by owner, no dead ends.
// Positions keep their declaration order; successor lists are sorted by index.
struct Arena {
  std::string name;
  std::vector<std::string> ids;
  std::vector<int> owner;  // 1 or 2
  std::vector<Props> props;
  std::vector<std::vector<int>> succ;
  int initial = -1;

  int position_count() const { return static_cast<int>(ids.size()); }
  int index_of(const std::string& id) const;  // -1 when absent
};

// Text format, '#' comments:
//   arena <name>
//   position <id> owner=<1|2> props=<p,q or ->
//   edge <src> <dst>
//   init <id>
Arena parse_arena(const std::string& text);
Arena load_arena(const std::string& path);
std::string arena_to_text(const Arena& a);

// Bipartite edges, no dead ends, initial declared. parse_arena calls this.
void validate_arena(const Arena& a);

// Graph view; node n projects onto itself (base identity).
TrackedGraph arena_graph(const Arena& a);

std::string arena_to_dot(const Arena& a);

// True when ids names a path of arena edges starting at the initial position.
bool arena_is_history(const Arena& a, const std::vector<int>& positions);

}  // namespace unisynt
