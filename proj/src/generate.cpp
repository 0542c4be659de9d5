#include "unisynt/generate.hpp"

#include <algorithm>
#include <filesystem>
#include <random>
#include <vector>

#include "unisynt/arena.hpp"
#include "unisynt/common.hpp"
#include "unisynt/transducer.hpp"

namespace unisynt {

namespace {

int rand_below(std::mt19937_64& rng, int n) { return static_cast<int>(rng() % static_cast<uint64_t>(n)); }

// Deterministic across standard libraries, unlike std::shuffle.
void mix(std::mt19937_64& rng, std::vector<int>& xs) {
  for (int i = static_cast<int>(xs.size()) - 1; i > 0; --i)
    std::swap(xs[i], xs[rand_below(rng, i + 1)]);
}

int clamp_size(int size, int lo, int hi) { return std::max(lo, std::min(hi, size)); }

}  // namespace

ExampleFiles gen_imperfect(uint64_t seed, int size, bool subjective) {
  if (size > 64) throw ValidationError("example size exceeds the guard of 64");
  std::mt19937_64 rng(seed);
  int n1 = clamp_size(size, 2, 16);

  Arena a;
  a.name = "imperfect_s" + std::to_string(seed);
  const std::vector<std::string> acts = {"x", "y"};
  for (int i = 0; i < n1; ++i) {
    a.ids.push_back("u" + std::to_string(i));
    a.owner.push_back(1);
    a.props.push_back(make_props({"p1"}));
  }
  a.succ.assign(n1, {});
  for (int i = 0; i < n1; ++i) {
    for (const std::string& act : acts) {
      a.ids.push_back("u" + std::to_string(i) + "_" + act);
      a.owner.push_back(2);
      a.props.push_back(make_props({"p" + act}));
      int self = static_cast<int>(a.ids.size()) - 1;
      a.succ[i].push_back(self);
      std::vector<int> targets = {rand_below(rng, n1)};
      if (rng() % 2 == 0) targets.push_back(rand_below(rng, n1));
      std::sort(targets.begin(), targets.end());
      targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
      a.succ.push_back(std::move(targets));
    }
  }
  a.initial = 0;

  std::vector<std::pair<std::string, std::string>> pairs;
  std::string relation;
  for (int k = 0; k < std::max(1, n1 / 2); ++k) {
    int i = rand_below(rng, n1), j = rand_below(rng, n1);
    if (i == j) continue;
    pairs.emplace_back(a.ids[i], a.ids[j]);
    relation += "sim " + a.ids[i] + " " + a.ids[j] + "\n";
  }

  if (subjective) {
    std::vector<int> cls = close_equivalence(a, pairs);
    a.ids.push_back("vinit");
    a.owner.push_back(1);
    a.props.push_back(make_props({"p1"}));
    int vinit = static_cast<int>(a.ids.size()) - 1;
    a.ids.push_back("winit");
    a.owner.push_back(2);
    a.props.push_back(make_props({"px"}));
    int winit = vinit + 1;
    a.succ.push_back({winit});
    std::vector<int> starts;
    for (int v = 0; v < n1; ++v)
      if (cls[v] == cls[0]) starts.push_back(v);
    a.succ.push_back(std::move(starts));
    a.initial = vinit;
  }
  validate_arena(a);

  ExampleFiles files;
  files.arena = arena_to_text(a);
  files.relation = relation;
  files.relation_is_obs = true;
  files.formula = "G (p1 -> (R X px | R X py))";
  return files;
}

ExampleFiles gen_opacity(uint64_t seed, int size) {
  if (size > 64) throw ValidationError("example size exceeds the guard of 64");
  std::mt19937_64 rng(seed);
  int n = clamp_size(size, 4, 16);
  int n1 = (n + 1) / 2, n2 = std::max(2, n / 2);

  Arena a;
  a.name = "opacity_s" + std::to_string(seed);
  for (int i = 0; i < n1; ++i) {
    a.ids.push_back("a" + std::to_string(i));
    a.owner.push_back(1);
    a.props.push_back({});
  }
  for (int j = 0; j < n2; ++j) {
    a.ids.push_back("b" + std::to_string(j));
    a.owner.push_back(2);
    a.props.push_back({});
  }
  int total = n1 + n2;
  a.succ.assign(total, {});
  auto connect = [&](int from, int base, int span) {
    std::vector<int> targets = {base + rand_below(rng, span)};
    if (rng() % 2 == 0) targets.push_back(base + rand_below(rng, span));
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    a.succ[from] = std::move(targets);
  };
  for (int i = 0; i < n1; ++i) connect(i, n1, n2);
  for (int j = 0; j < n2; ++j) connect(n1 + j, 0, n1);
  a.initial = 0;

  // Secret positions, never the initial one.
  std::vector<int> candidates;
  for (int v = 1; v < total; ++v) candidates.push_back(v);
  mix(rng, candidates);
  int secrets = std::max(1, n / 4);
  for (int k = 0; k < secrets && k < static_cast<int>(candidates.size()); ++k)
    a.props[candidates[k]] = make_props({"pS"});
  validate_arena(a);

  // Two observation classes; the observer sees only the class sequence.
  std::vector<int> cls(total);
  for (int v = 0; v < total; ++v) cls[v] = static_cast<int>(rng() % 2);
  BoundTransducer t;
  t.name = "obs_s" + std::to_string(seed);
  t.state_ids = {"o"};
  t.initial = 0;
  t.final_state = {true};
  for (int u = 0; u < total; ++u)
    for (int w = 0; w < total; ++w)
      if (cls[u] == cls[w]) t.rules.push_back({0, u, w, 0});
  t.rules_from.assign(1, {});
  for (size_t r = 0; r < t.rules.size(); ++r) t.rules_from[0].push_back(static_cast<int>(r));

  ExampleFiles files;
  files.arena = arena_to_text(a);
  files.relation = transducer_to_text(t, a);
  files.relation_is_obs = false;
  files.formula = "G ! R pS";
  return files;
}

void write_example(const ExampleFiles& files, const std::string& dir) {
  std::filesystem::create_directories(dir);
  write_file(dir + "/arena.txt", files.arena);
  write_file(dir + "/relation.txt", files.relation);
  write_file(dir + "/formula.txt", files.formula + "\n");
}

}  // namespace unisynt
