#include "unisynt/transducer.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace unisynt {

namespace {

int id_index(const std::vector<std::string>& ids, const std::string& id) {
  for (size_t i = 0; i < ids.size(); ++i)
    if (ids[i] == id) return static_cast<int>(i);
  return -1;
}

}  // namespace

RawTransducer parse_transducer(const std::string& text) {
  RawTransducer raw;
  bool named = false;
  for (const Line& line : tokenize_lines(text)) {
    const auto& t = line.tokens;
    if (t[0] == "transducer") {
      if (t.size() != 2) throw ParseError("transducer takes one name", line.number);
      if (named) throw ParseError("duplicate transducer header", line.number);
      raw.name = t[1];
      named = true;
    } else if (t[0] == "state") {
      if (t.size() < 2 || t.size() > 4) throw ParseError("state takes <id> [initial] [final]", line.number);
      if (id_index(raw.state_ids, t[1]) >= 0)
        throw ParseError("duplicate state " + t[1], line.number);
      raw.state_ids.push_back(t[1]);
      bool init = false, fin = false;
      for (size_t i = 2; i < t.size(); ++i) {
        if (t[i] == "initial" && !init) init = true;
        else if (t[i] == "final" && !fin) fin = true;
        else throw ParseError("bad state flag '" + t[i] + "'", line.number);
      }
      if (init) {
        if (!raw.initial.empty()) throw ParseError("second initial state", line.number);
        raw.initial = t[1];
      }
      if (fin) raw.finals.push_back(t[1]);
    } else if (t[0] == "trans") {
      if (t.size() != 5) throw ParseError("trans takes <q> <in|-> <out|-> <q'>", line.number);
      raw.rules.push_back({t[1], t[2], t[3], t[4]});
    } else {
      throw ParseError("unknown directive '" + t[0] + "'", line.number);
    }
  }
  if (!named) throw ParseError("missing transducer header");
  if (raw.state_ids.empty()) throw ParseError("transducer declares no states");
  if (raw.initial.empty()) throw ParseError("transducer declares no initial state");
  return raw;
}

RawTransducer load_transducer(const std::string& path) {
  return parse_transducer(read_file(path));
}

std::string transducer_to_text(const BoundTransducer& t, const Arena& a) {
  std::string out = "transducer " + t.name + "\n";
  for (int i = 0; i < t.state_count(); ++i) {
    out += "state " + t.state_ids[i];
    if (i == t.initial) out += " initial";
    if (t.final_state[i]) out += " final";
    out += "\n";
  }
  auto letter = [&](int v) { return v < 0 ? std::string("-") : a.ids[v]; };
  for (const auto& r : t.rules)
    out += "trans " + t.state_ids[r.from] + " " + letter(r.in) + " " + letter(r.out) + " " +
           t.state_ids[r.to] + "\n";
  return out;
}

namespace {

void index_rules(BoundTransducer& t) {
  t.rules_from.assign(t.state_count(), {});
  for (size_t i = 0; i < t.rules.size(); ++i)
    t.rules_from[t.rules[i].from].push_back(static_cast<int>(i));
}

}  // namespace

BoundTransducer bind_transducer(const RawTransducer& raw, const Arena& a) {
  BoundTransducer t;
  t.name = raw.name;
  t.state_ids = raw.state_ids;
  t.initial = id_index(raw.state_ids, raw.initial);
  t.final_state.assign(t.state_count(), false);
  for (const auto& f : raw.finals) t.final_state[id_index(raw.state_ids, f)] = true;

  auto letter = [&](const std::string& s) {
    if (s == "-") return -1;
    int v = a.index_of(s);
    if (v < 0) throw ValidationError("transducer rule uses unknown position " + s);
    return v;
  };
  for (const auto& [from, in, out, to] : raw.rules) {
    int f = id_index(raw.state_ids, from);
    int g = id_index(raw.state_ids, to);
    if (f < 0) throw ValidationError("transducer rule uses unknown state " + from);
    if (g < 0) throw ValidationError("transducer rule uses unknown state " + to);
    t.rules.push_back({f, letter(in), letter(out), g});
  }
  index_rules(t);
  return t;
}

BoundTransducer identity_transducer(const Arena& a) {
  BoundTransducer t;
  t.name = "identity";
  t.state_ids = {"q0"};
  t.initial = 0;
  t.final_state = {true};
  for (int v = 0; v < a.position_count(); ++v) t.rules.push_back({0, v, v, 0});
  index_rules(t);
  return t;
}

std::vector<std::pair<std::string, std::string>> parse_sim_pairs(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const Line& line : tokenize_lines(text)) {
    const auto& t = line.tokens;
    if (t[0] != "sim" || t.size() != 3)
      throw ParseError("expected: sim <u> <u'>", line.number);
    pairs.emplace_back(t[1], t[2]);
  }
  return pairs;
}

std::vector<int> close_equivalence(const Arena& a,
                                   const std::vector<std::pair<std::string, std::string>>& pairs) {
  int n = a.position_count();
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  for (const auto& [u, w] : pairs) {
    int ui = a.index_of(u);
    int wi = a.index_of(w);
    if (ui < 0) throw ValidationError("sim pair uses unknown position " + u);
    if (wi < 0) throw ValidationError("sim pair uses unknown position " + w);
    if (a.owner[ui] != 1 || a.owner[wi] != 1)
      throw ValidationError("sim pair relates a Player-2 position (" + u + ", " + w + ")");
    parent[find(ui)] = find(wi);
  }

  std::vector<int> cls(n, -1);
  std::map<int, int> root_to_class;
  for (int i = 0; i < n; ++i) {
    if (a.owner[i] != 1) continue;
    int r = find(i);
    auto it = root_to_class.find(r);
    if (it == root_to_class.end())
      it = root_to_class.emplace(r, static_cast<int>(root_to_class.size())).first;
    cls[i] = it->second;
  }
  return cls;
}

std::vector<std::string> check_obs_shape(const Arena& a) {
  if (a.owner[a.initial] != 1)
    throw ValidationError("action-encoded arena must start at a Player-1 position");
  std::vector<std::string> action(a.position_count());
  for (int i = 0; i < a.position_count(); ++i) {
    if (a.owner[i] == 1) {
      if (a.props[i] != Props{"p1"})
        throw ValidationError("Player-1 position " + a.ids[i] +
                              " must carry exactly the proposition p1");
    } else {
      if (a.props[i].size() != 1 || a.props[i][0] == "p1")
        throw ValidationError("Player-2 position " + a.ids[i] +
                              " must carry exactly one action proposition (not p1)");
      action[i] = a.props[i][0];
    }
  }
  return action;
}

BoundTransducer obs_equiv_transducer(const Arena& a,
                                     const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<std::string> action = check_obs_shape(a);
  std::vector<int> cls = close_equivalence(a, pairs);

  // Indistinguishable positions must offer the same actions.
  std::map<int, std::set<std::string>> class_actions;
  std::map<int, int> class_rep;
  for (int v = 0; v < a.position_count(); ++v) {
    if (cls[v] < 0) continue;
    std::set<std::string> avail;
    for (int s : a.succ[v]) avail.insert(action[s]);
    auto it = class_actions.find(cls[v]);
    if (it == class_actions.end()) {
      class_actions.emplace(cls[v], std::move(avail));
      class_rep.emplace(cls[v], v);
    } else if (it->second != avail) {
      throw ValidationError("indistinguishable positions " + a.ids[class_rep[cls[v]]] + " and " +
                            a.ids[v] + " offer different actions");
    }
  }

  BoundTransducer t;
  t.name = "obs";
  t.state_ids = {"q0"};
  t.initial = 0;
  t.final_state = {true};
  for (int u = 0; u < a.position_count(); ++u)
    for (int w = 0; w < a.position_count(); ++w) {
      bool related = a.owner[u] == 1 && a.owner[w] == 1 && cls[u] == cls[w];
      related = related || (a.owner[u] == 2 && a.owner[w] == 2 && action[u] == action[w]);
      if (related) t.rules.push_back({0, u, w, 0});
    }
  index_rules(t);
  return t;
}

bool relates(const BoundTransducer& t, const std::vector<int>& rho, const std::vector<int>& rho2) {
  int ni = static_cast<int>(rho.size());
  int no = static_cast<int>(rho2.size());
  std::set<std::array<int, 3>> seen;
  std::vector<std::array<int, 3>> todo = {{t.initial, 0, 0}};
  seen.insert(todo[0]);
  while (!todo.empty()) {
    auto [q, i, j] = todo.back();
    todo.pop_back();
    if (i == ni && j == no && t.final_state[q]) return true;
    for (int ri : t.rules_from[q]) {
      const auto& r = t.rules[ri];
      int i2 = i, j2 = j;
      if (r.in >= 0) {
        if (i == ni || rho[i] != r.in) continue;
        i2 = i + 1;
      }
      if (r.out >= 0) {
        if (j == no || rho2[j] != r.out) continue;
        j2 = j + 1;
      }
      std::array<int, 3> next = {r.to, i2, j2};
      if (seen.insert(next).second) todo.push_back(next);
    }
  }
  return false;
}

}  // namespace unisynt
