#include "unisynt/infostate.hpp"

#include <algorithm>
#include <set>

namespace unisynt {

namespace {

// Where a thread ending at `last` moves when the transducer emits base letter
// `out`; -2 when the letter extends no valid play from there.
int advance_output(const TrackedGraph& g, int last, int out) {
  if (last < 0) return g.base[g.initial] == out ? g.initial : -2;
  return graph_step_base(g, last, out);  // -1 from step means dead, map below
}

void close_outputs(const BoundTransducer& t, const TrackedGraph& g, std::set<InfoConfig>& s) {
  std::vector<InfoConfig> todo(s.begin(), s.end());
  while (!todo.empty()) {
    auto [q, last] = todo.back();
    todo.pop_back();
    for (int ri : t.rules_from[q]) {
      const auto& r = t.rules[ri];
      if (r.in >= 0) continue;
      int next_last = last;
      if (r.out >= 0) {
        next_last = advance_output(g, last, r.out);
        if (next_last < 0) continue;
      }
      InfoConfig c{r.to, next_last};
      if (s.insert(c).second) todo.push_back(c);
    }
  }
}

InfoState canonical(const std::set<InfoConfig>& s) { return InfoState(s.begin(), s.end()); }

}  // namespace

InfoState initial_infostate(const BoundTransducer& t, const TrackedGraph& g) {
  std::set<InfoConfig> s = {{t.initial, -1}};
  close_outputs(t, g, s);
  return canonical(s);
}

InfoState infostate_step(const BoundTransducer& t, const TrackedGraph& g, const InfoState& s,
                         int entered) {
  int letter = g.base[entered];
  std::set<InfoConfig> pre(s.begin(), s.end());
  close_outputs(t, g, pre);
  std::set<InfoConfig> post;
  for (const auto& [q, last] : pre) {
    for (int ri : t.rules_from[q]) {
      const auto& r = t.rules[ri];
      if (r.in != letter) continue;
      int next_last = last;
      if (r.out >= 0) {
        next_last = advance_output(g, last, r.out);
        if (next_last < 0) continue;
      }
      post.insert({r.to, next_last});
    }
  }
  close_outputs(t, g, post);
  return canonical(post);
}

std::vector<int> infostate_extract(const BoundTransducer& t, const InfoState& s) {
  std::vector<int> out;
  for (const auto& [q, last] : s)
    if (t.final_state[q] && last >= 0) out.push_back(last);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string infostate_format(const BoundTransducer& t, const TrackedGraph& g, const InfoState& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& [q, last] : s) {
    if (!first) out += " ";
    first = false;
    out += "(" + t.state_ids[q] + "," + (last < 0 ? std::string("_") : g.ids[last]) + ")";
  }
  return out + "}";
}

}  // namespace unisynt
