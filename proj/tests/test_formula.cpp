#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "unisynt/common.hpp"
#include "unisynt/formula.hpp"

using namespace unisynt;

TEST_CASE("parse atoms and constants") {
  CHECK(parse_formula("p")->op == FOp::Atom);
  CHECK(parse_formula("p")->atom == "p");
  CHECK(parse_formula("true")->op == FOp::True);
  Formula f = parse_formula("false");
  CHECK(f->op == FOp::Not);
  CHECK(f->lhs->op == FOp::True);
  CHECK(f_equal(parse_formula("some_atom_1"), f_atom("some_atom_1")));
}

TEST_CASE("precedence and associativity") {
  // U binds tighter than &, which binds tighter than |, then ->.
  CHECK(f_equal(parse_formula("p & q | r"), f_or(f_and(f_atom("p"), f_atom("q")), f_atom("r"))));
  CHECK(f_equal(parse_formula("p | q & r"), f_or(f_atom("p"), f_and(f_atom("q"), f_atom("r")))));
  CHECK(f_equal(parse_formula("p -> q -> r"),
                f_implies(f_atom("p"), f_implies(f_atom("q"), f_atom("r")))));
  Formula u = parse_formula("p U q U r");
  CHECK(u->op == FOp::Until);
  CHECK(u->lhs->op == FOp::Atom);
  CHECK(u->rhs->op == FOp::Until);
  // Unary operators bind tighter than U.
  CHECK(f_equal(parse_formula("! X p U q"), f_until(f_not(f_next(f_atom("p"))), f_atom("q"))));
  CHECK(f_equal(parse_formula("X (p U q)"), f_next(f_until(f_atom("p"), f_atom("q")))));
}

TEST_CASE("derived operators desugar at construction") {
  CHECK(f_equal(parse_formula("F p"), f_until(f_true(), f_atom("p"))));
  Formula g = parse_formula("G p");
  CHECK(g->op == FOp::Not);
  CHECK(g->lhs->op == FOp::Until);
  CHECK(f_equal(g, f_not(f_until(f_true(), f_not(f_atom("p"))))));
  CHECK(f_equal(parse_formula("p | q"), f_not(f_and(f_not(f_atom("p")), f_not(f_atom("q"))))));
  CHECK(f_equal(parse_formula("p -> q"), f_not(f_and(f_atom("p"), f_not(f_atom("q"))))));
}

TEST_CASE("rel modality parses as unary") {
  Formula f = parse_formula("G ! R pS");
  CHECK(r_depth(f) == 1);
  Formula same_act = parse_formula("G (p1 -> (R X pa | R X pb))");
  CHECK(r_depth(same_act) == 1);
  std::vector<Formula> inner = innermost_r_subformulas(same_act);
  REQUIRE(inner.size() == 2);
  CHECK(f_equal(inner[0], f_rel(f_next(f_atom("pa")))));
  CHECK(f_equal(inner[1], f_rel(f_next(f_atom("pb")))));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_formula(""), ParseError);
  CHECK_THROWS_AS(parse_formula("p &"), ParseError);
  CHECK_THROWS_AS(parse_formula("(p"), ParseError);
  CHECK_THROWS_AS(parse_formula("p q"), ParseError);
  CHECK_THROWS_AS(parse_formula("p # q"), ParseError);
  CHECK_THROWS_AS(parse_formula("U p"), ParseError);
  // '@' is reserved for internally generated atoms.
  CHECK_THROWS_AS(parse_formula("@R1"), ParseError);
  CHECK_THROWS_AS(parse_formula("p & @x"), ParseError);
}

TEST_CASE("r_depth") {
  CHECK(r_depth(parse_formula("p U q")) == 0);
  CHECK(r_depth(parse_formula("G ! R pS")) == 1);
  CHECK(r_depth(parse_formula("R (p & R q) & R r")) == 2);
  CHECK(r_depth(parse_formula("R R R p")) == 3);
}

TEST_CASE("innermost R subformulas") {
  std::vector<Formula> one = innermost_r_subformulas(parse_formula("G ! R pS"));
  REQUIRE(one.size() == 1);
  CHECK(f_equal(one[0], f_rel(f_atom("pS"))));

  // Structural deduplication: the same subformula appears once.
  std::vector<Formula> dedup = innermost_r_subformulas(parse_formula("R p & F R p"));
  CHECK(dedup.size() == 1);

  // Only the innermost occurrence of a nested chain counts.
  std::vector<Formula> nested = innermost_r_subformulas(parse_formula("R (p & R q)"));
  REQUIRE(nested.size() == 1);
  CHECK(f_equal(nested[0], f_rel(f_atom("q"))));

  CHECK_THROWS_AS(innermost_r_subformulas(parse_formula("G p")), UnisyntError);
}

TEST_CASE("replace_subformulas") {
  Formula f = parse_formula("R p & X R p");
  Formula replaced = replace_subformulas(f, {{f_rel(f_atom("p")), f_atom("x")}});
  CHECK(f_equal(replaced, parse_formula("x & X x")));
  CHECK(r_depth(replaced) == 0);
}

TEST_CASE("formula_atoms") {
  std::vector<std::string> atoms = formula_atoms(parse_formula("G (p1 -> (R X px | R X py))"));
  CHECK(atoms == std::vector<std::string>{"p1", "px", "py"});
  CHECK(formula_atoms(parse_formula("true")).empty());
}

TEST_CASE("print-parse round trip on handwritten formulas") {
  for (const char* text : {"p", "true", "false", "p & q | r", "p -> q -> r", "! X p U q",
                           "G (p1 -> (R X px | R X py))", "G ! R pS", "R (p & R q) & R r",
                           "F G p & G F q", "p U (q U r)"}) {
    Formula f = parse_formula(text);
    CHECK(f_equal(parse_formula(format_formula(f)), f));
  }
}

TEST_CASE("print-parse round trip on random formulas") {
  oracles::Rng rng(20260819);
  std::vector<std::string> atoms = {"p", "q", "r"};
  for (int i = 0; i < 300; ++i) {
    Formula f = oracles::random_ltl(rng, atoms, 2 + oracles::pick(rng, 7));
    Formula back = parse_formula(format_formula(f));
    CHECK(f_equal(back, f));
  }
  for (int i = 0; i < 100; ++i) {
    Formula f = oracles::random_depth2(rng, atoms, 4);
    Formula back = parse_formula(format_formula(f));
    CHECK(f_equal(back, f));
    CHECK(r_depth(back) == 2);
  }
}

TEST_CASE("formula_size is positive and monotone under nesting") {
  CHECK(formula_size(f_atom("p")) >= 1);
  CHECK(formula_size(parse_formula("X p")) > formula_size(parse_formula("p")));
}
