#include "unisynt/strategy.hpp"

#include <algorithm>
#include <map>

namespace unisynt {

namespace {

int mem_index(const std::vector<std::string>& ids, const std::string& id) {
  for (size_t i = 0; i < ids.size(); ++i)
    if (ids[i] == id) return static_cast<int>(i);
  return -1;
}

}  // namespace

RawStrategy parse_strategy(const std::string& text) {
  RawStrategy raw;
  bool named = false;
  for (const Line& line : tokenize_lines(text)) {
    const auto& t = line.tokens;
    if (t[0] == "strategy") {
      if (t.size() != 2) throw ParseError("strategy takes one name", line.number);
      if (named) throw ParseError("duplicate strategy header", line.number);
      raw.name = t[1];
      named = true;
    } else if (t[0] == "memory") {
      if (t.size() != 2 && !(t.size() == 3 && t[2] == "initial"))
        throw ParseError("memory takes <id> [initial]", line.number);
      if (mem_index(raw.mem_ids, t[1]) >= 0)
        throw ParseError("duplicate memory state " + t[1], line.number);
      raw.mem_ids.push_back(t[1]);
      if (t.size() == 3) {
        if (!raw.initial_mem.empty()) throw ParseError("second initial memory state", line.number);
        raw.initial_mem = t[1];
      }
    } else if (t[0] == "update" || t[0] == "move") {
      if (t.size() != 4) throw ParseError(t[0] + " takes <m> <pos> <target>", line.number);
      auto& rows = t[0] == "update" ? raw.updates : raw.moves;
      rows.push_back({t[1], t[2], t[3]});
    } else {
      throw ParseError("unknown directive '" + t[0] + "'", line.number);
    }
  }
  if (!named) throw ParseError("missing strategy header");
  if (raw.mem_ids.empty()) throw ParseError("strategy declares no memory states");
  if (raw.initial_mem.empty()) throw ParseError("strategy declares no initial memory state");
  return raw;
}

RawStrategy load_strategy(const std::string& path) { return parse_strategy(read_file(path)); }

StrategyMachine bind_strategy(const RawStrategy& raw, const Arena& a) {
  StrategyMachine m;
  m.name = raw.name;
  m.mem_ids = raw.mem_ids;
  m.mem_initial = mem_index(raw.mem_ids, raw.initial_mem);
  int k = m.memory_count();
  int n = a.position_count();
  m.update.assign(k, std::vector<int>(n, -1));
  m.output.assign(k, std::vector<int>(n, -1));

  for (const auto& [mem, pos, target] : raw.updates) {
    int mi = mem_index(raw.mem_ids, mem);
    int p = a.index_of(pos);
    int mt = mem_index(raw.mem_ids, target);
    if (mi < 0) throw ValidationError("update uses unknown memory state " + mem);
    if (p < 0) throw ValidationError("update uses unknown position " + pos);
    if (mt < 0) throw ValidationError("update uses unknown memory state " + target);
    if (m.update[mi][p] >= 0)
      throw ValidationError("duplicate update row for (" + mem + ", " + pos + ")");
    m.update[mi][p] = mt;
  }
  for (const auto& [mem, pos, target] : raw.moves) {
    int mi = mem_index(raw.mem_ids, mem);
    int p = a.index_of(pos);
    int tp = a.index_of(target);
    if (mi < 0) throw ValidationError("move uses unknown memory state " + mem);
    if (p < 0) throw ValidationError("move uses unknown position " + pos);
    if (tp < 0) throw ValidationError("move uses unknown position " + target);
    if (a.owner[p] != 1)
      throw ValidationError("move declared on Player-2 position " + pos);
    if (!std::binary_search(a.succ[p].begin(), a.succ[p].end(), tp))
      throw ValidationError("move " + pos + " -> " + target + " is not an arena edge");
    if (m.output[mi][p] >= 0)
      throw ValidationError("duplicate move row for (" + mem + ", " + pos + ")");
    m.output[mi][p] = tp;
  }
  return m;
}

std::string strategy_to_text(const StrategyMachine& m, const Arena& a) {
  std::string out = "strategy " + m.name + "\n";
  for (int i = 0; i < m.memory_count(); ++i)
    out += "memory " + m.mem_ids[i] + (i == m.mem_initial ? " initial" : "") + "\n";
  for (int i = 0; i < m.memory_count(); ++i)
    for (int p = 0; p < a.position_count(); ++p)
      if (m.update[i][p] >= 0)
        out += "update " + m.mem_ids[i] + " " + a.ids[p] + " " + m.mem_ids[m.update[i][p]] + "\n";
  for (int i = 0; i < m.memory_count(); ++i)
    for (int p = 0; p < a.position_count(); ++p)
      if (m.output[i][p] >= 0)
        out += "move " + m.mem_ids[i] + " " + a.ids[p] + " " + a.ids[m.output[i][p]] + "\n";
  return out;
}

std::string strategy_to_dot(const StrategyMachine& m, const Arena& a) {
  std::string out = "digraph " + m.name + " {\n  rankdir=LR;\n";
  for (int i = 0; i < m.memory_count(); ++i) {
    out += "  m" + std::to_string(i) + " [shape=circle, label=\"" + m.mem_ids[i] + "\"";
    if (i == m.mem_initial) out += ", penwidth=2";
    out += "];\n";
  }
  for (int i = 0; i < m.memory_count(); ++i)
    for (int p = 0; p < a.position_count(); ++p)
      if (m.update[i][p] >= 0) {
        std::string label = a.ids[p];
        if (m.output[i][p] >= 0) label += " / " + a.ids[m.output[i][p]];
        out += "  m" + std::to_string(i) + " -> m" + std::to_string(m.update[i][p]) +
               " [label=\"" + label + "\"];\n";
      }
  out += "}\n";
  return out;
}

TrackedGraph outcome_product(const Arena& a, const StrategyMachine& m) {
  TrackedGraph g;
  g.base_ids = a.ids;
  std::map<std::pair<int, int>, int> index;  // (pos, mem) -> node

  auto intern = [&](int pos, int mem) {
    auto it = index.find({pos, mem});
    if (it != index.end()) return it->second;
    int n = g.node_count();
    index.emplace(std::make_pair(pos, mem), n);
    g.ids.push_back(a.ids[pos] + "#" + m.mem_ids[mem]);
    g.owner.push_back(a.owner[pos]);
    g.val.push_back(a.props[pos]);
    g.base.push_back(pos);
    g.succ.emplace_back();
    return n;
  };

  auto enter = [&](int mem, int pos) {
    int next = m.update[mem][pos];
    if (next < 0)
      throw MachineError("update undefined for memory " + m.mem_ids[mem] + " at position " +
                         a.ids[pos]);
    return next;
  };

  g.initial = intern(a.initial, m.mem_initial);
  std::vector<std::pair<int, int>> todo = {{a.initial, m.mem_initial}};
  for (size_t head = 0; head < todo.size(); ++head) {
    auto [pos, mem] = todo[head];
    int node = index.at({pos, mem});
    std::vector<int> targets;
    if (a.owner[pos] == 1) {
      int out = m.output[mem][pos];
      if (out < 0)
        throw MachineError("move undefined for memory " + m.mem_ids[mem] + " at position " +
                           a.ids[pos]);
      targets.push_back(out);
    } else {
      targets = a.succ[pos];
    }
    for (int t : targets) {
      int tm = enter(mem, t);
      bool fresh = index.find({t, tm}) == index.end();
      int tn = intern(t, tm);
      if (fresh) todo.emplace_back(t, tm);
      g.succ[node].push_back(tn);
    }
  }
  for (auto& list : g.succ) std::sort(list.begin(), list.end());
  graph_validate(g, "outcome_product");
  return g;
}

}  // namespace unisynt
