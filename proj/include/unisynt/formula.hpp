#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "unisynt/common.hpp"

namespace unisynt {

// Formula core: atoms, negation, conjunction, next, until, and the
// related-plays modality R ("the body holds at the end of every related
// prefix").  Everything else (or, implies, F, G, false) is desugared at
// construction time; `true` is kept as a nullary constructor because the
// F/G desugarings need it.
enum class FOp { True, Atom, Not, And, Next, Until, Rel };

class FormulaNode;
using Formula = std::shared_ptr<const FormulaNode>;

class FormulaNode {
 public:
  FOp op;
  std::string atom;  // FOp::Atom only
  Formula lhs, rhs;  // unary operators use lhs only
  size_t hash = 0;
};

Formula f_true();
Formula f_false();
Formula f_atom(const std::string& name);
Formula f_not(Formula a);
Formula f_and(Formula a, Formula b);
Formula f_or(Formula a, Formula b);
Formula f_implies(Formula a, Formula b);
Formula f_next(Formula a);
Formula f_until(Formula a, Formula b);
Formula f_eventually(Formula a);
Formula f_globally(Formula a);
Formula f_rel(Formula a);

bool f_equal(const Formula& a, const Formula& b);

int formula_size(const Formula& f);

// Maximal nesting depth of the R modality.
int r_depth(const Formula& f);

// The R-subformulas whose bodies are R-free, deduplicated structurally,
// in print order.  Error when the formula is R-free.
std::vector<Formula> innermost_r_subformulas(const Formula& f);

// Structural replacement; every node equal to a key is swapped for its image.
Formula replace_subformulas(const Formula& f,
                            const std::vector<std::pair<Formula, Formula>>& subs);

// Atom names occurring in the formula, sorted.
std::vector<std::string> formula_atoms(const Formula& f);

// Concrete syntax.  Atoms [A-Za-z_][A-Za-z0-9_]*; reserved words: true,
// false, X, G, F, R, U.  Precedence !,X,G,F,R > U (right-assoc) > & > | > ->.
// '@' is reserved for internally generated atoms and rejected here.
Formula parse_formula(const std::string& text);
std::string format_formula(const Formula& f);

}  // namespace unisynt
