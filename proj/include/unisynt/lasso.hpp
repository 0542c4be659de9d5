#pragma once

#include <string>
#include <vector>

#include "unisynt/common.hpp"
#include "unisynt/formula.hpp"

namespace unisynt {

// Ultimately periodic word stem . loop^w over propositional letters.
struct LassoWord {
  std::vector<Props> stem;
  std::vector<Props> loop;  // nonempty
};

// Index folded into [0, stem+loop): positions past the stem wrap around the loop.
int lasso_normalize(const LassoWord& w, int i);

const Props& lasso_letter(const LassoWord& w, int i);

// Evaluates an R-free formula at position i of the word. Throws on R.
bool eval_ltl_lasso(const Formula& f, const LassoWord& w, int i = 0);

std::string lasso_format(const LassoWord& w);

}  // namespace unisynt
