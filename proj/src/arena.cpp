#include "unisynt/arena.hpp"

#include <algorithm>
#include <set>

namespace unisynt {

int Arena::index_of(const std::string& id) const {
  for (int i = 0; i < position_count(); ++i)
    if (ids[i] == id) return i;
  return -1;
}

namespace {

// "owner=1" -> value after the '=', with the key checked.
std::string kv_value(const std::string& token, const std::string& key, int line) {
  auto eq = token.find('=');
  if (eq == std::string::npos || token.substr(0, eq) != key)
    throw ParseError("expected " + key + "=..., got '" + token + "'", line);
  return token.substr(eq + 1);
}

}  // namespace

Arena parse_arena(const std::string& text) {
  Arena a;
  std::set<std::pair<int, int>> edges;
  std::vector<std::tuple<std::string, std::string, int>> pending_edges;
  std::string pending_init;
  int init_line = 0;
  bool named = false;

  for (const Line& line : tokenize_lines(text)) {
    const auto& t = line.tokens;
    if (t[0] == "arena") {
      if (t.size() != 2) throw ParseError("arena takes one name", line.number);
      if (named) throw ParseError("duplicate arena header", line.number);
      a.name = t[1];
      named = true;
    } else if (t[0] == "position") {
      if (t.size() != 4) throw ParseError("position takes <id> owner=<1|2> props=<...>", line.number);
      if (a.index_of(t[1]) >= 0) throw ParseError("duplicate position " + t[1], line.number);
      std::string owner = kv_value(t[2], "owner", line.number);
      if (owner != "1" && owner != "2") throw ParseError("owner must be 1 or 2", line.number);
      a.ids.push_back(t[1]);
      a.owner.push_back(owner == "1" ? 1 : 2);
      a.props.push_back(props_parse(kv_value(t[3], "props", line.number)));
      a.succ.emplace_back();
    } else if (t[0] == "edge") {
      if (t.size() != 3) throw ParseError("edge takes <src> <dst>", line.number);
      pending_edges.emplace_back(t[1], t[2], line.number);
    } else if (t[0] == "init") {
      if (t.size() != 2) throw ParseError("init takes one position id", line.number);
      if (!pending_init.empty()) throw ParseError("duplicate init", line.number);
      pending_init = t[1];
      init_line = line.number;
    } else {
      throw ParseError("unknown directive '" + t[0] + "'", line.number);
    }
  }

  if (!named) throw ParseError("missing arena header");
  for (const auto& [src, dst, ln] : pending_edges) {
    int s = a.index_of(src);
    int d = a.index_of(dst);
    if (s < 0) throw ParseError("edge from undeclared position " + src, ln);
    if (d < 0) throw ParseError("edge to undeclared position " + dst, ln);
    if (edges.insert({s, d}).second) a.succ[s].push_back(d);
  }
  for (auto& list : a.succ) std::sort(list.begin(), list.end());
  if (pending_init.empty()) throw ParseError("missing init");
  a.initial = a.index_of(pending_init);
  if (a.initial < 0) throw ParseError("init names undeclared position " + pending_init, init_line);

  validate_arena(a);
  return a;
}

Arena load_arena(const std::string& path) { return parse_arena(read_file(path)); }

std::string arena_to_text(const Arena& a) {
  std::string out = "arena " + a.name + "\n";
  for (int i = 0; i < a.position_count(); ++i)
    out += "position " + a.ids[i] + " owner=" + std::to_string(a.owner[i]) +
           " props=" + props_format(a.props[i]) + "\n";
  for (int i = 0; i < a.position_count(); ++i)
    for (int s : a.succ[i]) out += "edge " + a.ids[i] + " " + a.ids[s] + "\n";
  out += "init " + a.ids[a.initial] + "\n";
  return out;
}

void validate_arena(const Arena& a) {
  if (a.position_count() == 0) throw ValidationError("arena has no positions");
  if (a.initial < 0) throw ValidationError("arena has no initial position");
  for (int i = 0; i < a.position_count(); ++i) {
    if (a.succ[i].empty())
      throw ValidationError("arena position " + a.ids[i] + " has no outgoing edge");
    for (int s : a.succ[i])
      if (a.owner[i] == a.owner[s])
        throw ValidationError("arena is not bipartite: edge " + a.ids[i] + " -> " + a.ids[s] +
                              " stays with player " + std::to_string(a.owner[i]));
  }
}

TrackedGraph arena_graph(const Arena& a) {
  TrackedGraph g;
  g.ids = a.ids;
  g.owner = a.owner;
  g.val = a.props;
  g.succ = a.succ;
  g.base_ids = a.ids;
  g.base.resize(a.position_count());
  for (int i = 0; i < a.position_count(); ++i) g.base[i] = i;
  g.initial = a.initial;
  return g;
}

std::string arena_to_dot(const Arena& a) { return graph_to_dot(arena_graph(a), a.name); }

bool arena_is_history(const Arena& a, const std::vector<int>& positions) {
  if (positions.empty() || positions[0] != a.initial) return false;
  for (size_t i = 0; i + 1 < positions.size(); ++i) {
    const auto& s = a.succ[positions[i]];
    if (!std::binary_search(s.begin(), s.end(), positions[i + 1])) return false;
  }
  return true;
}

}  // namespace unisynt
