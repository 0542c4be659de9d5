#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "unisynt/arena.hpp"
#include "unisynt/common.hpp"
#include "unisynt/formula.hpp"
#include "unisynt/generate.hpp"
#include "unisynt/transducer.hpp"

using namespace unisynt;

TEST_CASE("imperfect-information instances round trip") {
  for (uint64_t seed : {1ULL, 2ULL, 77ULL}) {
    ExampleFiles files = gen_imperfect(seed, 4, false);
    CHECK(files.relation_is_obs);
    Arena a = parse_arena(files.arena);
    std::vector<std::pair<std::string, std::string>> sim = parse_sim_pairs(files.relation);
    // The relation loads against the arena.
    BoundTransducer t = obs_equiv_transducer(a, sim);
    CHECK(t.state_count() >= 1);
    // The arena is in the action-encoded shape with actions x and y.
    std::vector<std::string> act = check_obs_shape(a);
    std::set<std::string> actions;
    for (const auto& s : act)
      if (!s.empty()) actions.insert(s);
    CHECK(actions == std::set<std::string>{"px", "py"});
    Formula phi = parse_formula(files.formula);
    CHECK(f_equal(phi, parse_formula("G (p1 -> (R X px | R X py))")));
  }
}

TEST_CASE("generation is deterministic in the seed") {
  ExampleFiles a = gen_imperfect(42, 5, true);
  ExampleFiles b = gen_imperfect(42, 5, true);
  CHECK(a.arena == b.arena);
  CHECK(a.relation == b.relation);
  CHECK(a.formula == b.formula);
  ExampleFiles c = gen_imperfect(43, 5, true);
  CHECK(a.arena != c.arena);

  ExampleFiles d = gen_opacity(7, 6);
  ExampleFiles e = gen_opacity(7, 6);
  CHECK(d.arena == e.arena);
  CHECK(d.relation == e.relation);
}

TEST_CASE("subjective variant prepends one fresh initial position") {
  for (uint64_t seed : {3ULL, 9ULL, 12ULL}) {
    ExampleFiles plain = gen_imperfect(seed, 4, false);
    ExampleFiles subj = gen_imperfect(seed, 4, true);
    Arena base = parse_arena(plain.arena);
    Arena a = parse_arena(subj.arena);

    // Exactly one extra Player-1 position (the new initial) plus its action.
    int base_p1 = 0, subj_p1 = 0;
    for (int o : base.owner) base_p1 += o == 1 ? 1 : 0;
    for (int o : a.owner) subj_p1 += o == 1 ? 1 : 0;
    CHECK(subj_p1 == base_p1 + 1);
    CHECK(a.position_count() == base.position_count() + 2);
    CHECK(a.owner[a.initial] == 1);
    CHECK(a.ids[a.initial] != base.ids[base.initial]);

    // The new initial has a single move; the entered Player-2 position fans
    // out to every position equivalent to the old initial.
    REQUIRE(a.succ[a.initial].size() == 1);
    int gate = a.succ[a.initial][0];
    CHECK(a.owner[gate] == 2);
    std::vector<std::pair<std::string, std::string>> sim = parse_sim_pairs(subj.relation);
    std::vector<int> cls = close_equivalence(a, sim);
    int old_init = a.index_of(base.ids[base.initial]);
    REQUIRE(old_init >= 0);
    std::set<int> expected;
    for (int v = 0; v < a.position_count(); ++v)
      if (a.owner[v] == 1 && cls[v] == cls[old_init] && v != a.initial) expected.insert(v);
    CHECK(std::set<int>(a.succ[gate].begin(), a.succ[gate].end()) == expected);
    CHECK(a.succ[gate].size() == expected.size());

    // Still a fully valid action-shaped instance.
    CHECK_NOTHROW(check_obs_shape(a));
    CHECK_NOTHROW(obs_equiv_transducer(a, sim));
  }
}

TEST_CASE("opacity instances round trip and stay within shape") {
  for (uint64_t seed : {5ULL, 8ULL, 21ULL}) {
    ExampleFiles files = gen_opacity(seed, 6);
    CHECK_FALSE(files.relation_is_obs);
    Arena a = parse_arena(files.arena);
    CHECK(a.position_count() <= 16);
    RawTransducer raw = parse_transducer(files.relation);
    BoundTransducer t = bind_transducer(raw, a);
    CHECK(t.state_count() >= 1);
    Formula phi = parse_formula(files.formula);
    CHECK(f_equal(phi, parse_formula("G ! R pS")));
    // Secrets exist and exclude the initial position.
    int secrets = 0;
    for (int v = 0; v < a.position_count(); ++v)
      if (props_contains(a.props[v], "pS")) {
        ++secrets;
        CHECK(v != a.initial);
      }
    CHECK(secrets >= 1);
  }
}

TEST_CASE("size guard rejects oversized requests") {
  CHECK_THROWS_AS(gen_imperfect(1, 100000, false), ValidationError);
  CHECK_THROWS_AS(gen_opacity(1, 100000), ValidationError);
}

TEST_CASE("write_example produces loadable files") {
  ExampleFiles files = gen_opacity(3, 5);
  std::string dir = "/tmp/unisynt_test_example";
  write_example(files, dir);
  Arena a = parse_arena(read_file(dir + "/arena.txt"));
  CHECK(a.position_count() >= 2);
  CHECK(read_file(dir + "/formula.txt").find("pS") != std::string::npos);
  CHECK_NOTHROW(bind_transducer(parse_transducer(read_file(dir + "/relation.txt")), a));
}
