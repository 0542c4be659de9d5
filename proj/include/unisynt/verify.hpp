#pragma once

#include <string>
#include <utility>
#include <vector>

#include "unisynt/arena.hpp"
#include "unisynt/elimination.hpp"
#include "unisynt/formula.hpp"
#include "unisynt/strategy.hpp"
#include "unisynt/transducer.hpp"

namespace unisynt {

// Verdict of a uniformity check. On failure, a violating outcome is reported
// as a lasso of arena position indices together with the blamed evaluation
// index (for G-shaped formulas the first position where the body fails,
// otherwise 0).
struct VerifyResult {
  bool holds = true;
  std::vector<int> stem;  // arena position indices
  std::vector<int> loop;  // nonempty when !holds
  int index = 0;
};

// "HOLDS" or "FAILS <stem> (<loop>)^w @ <index>" with position ids.
std::string verify_verdict_line(const Arena& a, const VerifyResult& r);

// Every outcome of the machine satisfies phi when R ranges over all plays of
// the arena: eliminates R over the arena graph, then model-checks the R-free
// remainder on the outcome product lifted to the final layer.
VerifyResult check_fully_uniform(const Arena& a, const BoundTransducer& t, const Formula& phi,
                                 const StrategyMachine& m, long long cap = 1000000);

// Same, with R ranging over the outcomes only: the elimination tower is built
// directly on the outcome product, so tracked configurations pair transducer
// states with (position, memory) nodes.
VerifyResult check_strictly_uniform(const Arena& a, const BoundTransducer& t, const Formula& phi,
                                    const StrategyMachine& m, long long cap = 1000000);

// True iff no two observation-equivalent machine-reachable histories ending
// in Player-1 positions get different actions. The arena must be in the
// action-encoded shape checked by check_obs_shape; the equivalence is the
// closure of the given sim pairs. Decided exactly on the synchronized product
// outcome x outcome x relation-transducer.
bool check_observation_based(const Arena& a,
                             const std::vector<std::pair<std::string, std::string>>& pairs,
                             const StrategyMachine& m);

// Direct information-set check for opacity instances: the machine wins iff no
// machine-reachable history has its information set (tracked over all plays
// of the arena) contained in the secret positions. An empty information set
// counts as contained.
bool opacity_winning_direct(const Arena& a, const BoundTransducer& t, const StrategyMachine& m,
                            const std::vector<bool>& secret);

enum class UniformityMode { kFully, kStrictly };

// All machines with at most max_memory memory values passing the selected
// check, enumerated canonically (memory values named in first-use order, only
// reachable rows decided). Throws ResourceLimitError past `guard` candidates.
std::vector<StrategyMachine> enumerate_and_verify(const Arena& a, const BoundTransducer& t,
                                                  const Formula& phi, UniformityMode mode,
                                                  int max_memory, long long cap = 1000000,
                                                  long long guard = 200000);

}  // namespace unisynt
