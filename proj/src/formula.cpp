#include "unisynt/formula.hpp"

#include <algorithm>
#include <cctype>

namespace unisynt {

namespace {

size_t hash_mix(size_t a, size_t b) {
  return a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
}

Formula make_node(FOp op, std::string atom, Formula lhs, Formula rhs) {
  auto n = std::make_shared<FormulaNode>();
  n->op = op;
  n->atom = std::move(atom);
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  size_t h = static_cast<size_t>(op) * 1099511628211ULL;
  h = hash_mix(h, std::hash<std::string>{}(n->atom));
  if (n->lhs) h = hash_mix(h, n->lhs->hash);
  if (n->rhs) h = hash_mix(h, n->rhs->hash);
  n->hash = h;
  return n;
}

}  // namespace

Formula f_true() { return make_node(FOp::True, "", nullptr, nullptr); }
Formula f_false() { return f_not(f_true()); }
Formula f_atom(const std::string& name) { return make_node(FOp::Atom, name, nullptr, nullptr); }
Formula f_not(Formula a) { return make_node(FOp::Not, "", std::move(a), nullptr); }
Formula f_and(Formula a, Formula b) { return make_node(FOp::And, "", std::move(a), std::move(b)); }
Formula f_or(Formula a, Formula b) { return f_not(f_and(f_not(std::move(a)), f_not(std::move(b)))); }
Formula f_implies(Formula a, Formula b) { return f_not(f_and(std::move(a), f_not(std::move(b)))); }
Formula f_next(Formula a) { return make_node(FOp::Next, "", std::move(a), nullptr); }
Formula f_until(Formula a, Formula b) { return make_node(FOp::Until, "", std::move(a), std::move(b)); }
Formula f_eventually(Formula a) { return f_until(f_true(), std::move(a)); }
Formula f_globally(Formula a) { return f_not(f_until(f_true(), f_not(std::move(a)))); }
Formula f_rel(Formula a) { return make_node(FOp::Rel, "", std::move(a), nullptr); }

bool f_equal(const Formula& a, const Formula& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->hash != b->hash || a->op != b->op || a->atom != b->atom) return false;
  return f_equal(a->lhs, b->lhs) && f_equal(a->rhs, b->rhs);
}

int formula_size(const Formula& f) {
  if (!f) return 0;
  return 1 + formula_size(f->lhs) + formula_size(f->rhs);
}

int r_depth(const Formula& f) {
  if (!f) return 0;
  int d = std::max(r_depth(f->lhs), r_depth(f->rhs));
  return f->op == FOp::Rel ? d + 1 : d;
}

namespace {

void collect_innermost(const Formula& f, std::vector<Formula>& out) {
  if (!f) return;
  if (f->op == FOp::Rel && r_depth(f->lhs) == 0) {
    for (const auto& seen : out)
      if (f_equal(seen, f)) return;
    out.push_back(f);
    return;
  }
  collect_innermost(f->lhs, out);
  collect_innermost(f->rhs, out);
}

void collect_atoms(const Formula& f, std::vector<std::string>& out) {
  if (!f) return;
  if (f->op == FOp::Atom) out.push_back(f->atom);
  collect_atoms(f->lhs, out);
  collect_atoms(f->rhs, out);
}

}  // namespace

std::vector<Formula> innermost_r_subformulas(const Formula& f) {
  if (r_depth(f) == 0) throw UnisyntError("innermost_r_subformulas: formula has no R modality");
  std::vector<Formula> out;
  collect_innermost(f, out);
  return out;
}

Formula replace_subformulas(const Formula& f,
                            const std::vector<std::pair<Formula, Formula>>& subs) {
  if (!f) return f;
  for (const auto& [from, to] : subs)
    if (f_equal(f, from)) return to;
  Formula lhs = replace_subformulas(f->lhs, subs);
  Formula rhs = replace_subformulas(f->rhs, subs);
  if (lhs.get() == f->lhs.get() && rhs.get() == f->rhs.get()) return f;
  return make_node(f->op, f->atom, lhs, rhs);
}

std::vector<std::string> formula_atoms(const Formula& f) {
  std::vector<std::string> out;
  collect_atoms(f, out);
  return make_props(std::move(out));
}

// ---------------------------------------------------------------- parsing

namespace {

struct Token {
  enum Kind { Atom, KwTrue, KwFalse, Not, And, Or, Implies, Next, Glob, Event, Rel, Until,
              LPar, RPar, End } kind;
  std::string text;
  int pos;
};

struct Lexer {
  const std::string& src;
  size_t i = 0;
  explicit Lexer(const std::string& s) : src(s) {}

  Token next() {
    while (i < src.size() && std::isspace(static_cast<unsigned char>(src[i]))) ++i;
    int pos = static_cast<int>(i);
    if (i >= src.size()) return {Token::End, "", pos};
    char c = src[i];
    if (c == '(') { ++i; return {Token::LPar, "(", pos}; }
    if (c == ')') { ++i; return {Token::RPar, ")", pos}; }
    if (c == '!') { ++i; return {Token::Not, "!", pos}; }
    if (c == '&') { ++i; return {Token::And, "&", pos}; }
    if (c == '|') { ++i; return {Token::Or, "|", pos}; }
    if (c == '-') {
      if (i + 1 < src.size() && src[i + 1] == '>') { i += 2; return {Token::Implies, "->", pos}; }
      throw ParseError("stray '-' at offset " + std::to_string(pos));
    }
    if (c == '@')
      throw ParseError("'@' is reserved for generated atoms (offset " + std::to_string(pos) + ")");
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      std::string word = src.substr(i, j - i);
      i = j;
      if (word == "true") return {Token::KwTrue, word, pos};
      if (word == "false") return {Token::KwFalse, word, pos};
      if (word == "X") return {Token::Next, word, pos};
      if (word == "G") return {Token::Glob, word, pos};
      if (word == "F") return {Token::Event, word, pos};
      if (word == "R") return {Token::Rel, word, pos};
      if (word == "U") return {Token::Until, word, pos};
      return {Token::Atom, word, pos};
    }
    throw ParseError(std::string("unexpected character '") + c + "' at offset " + std::to_string(pos));
  }
};

struct Parser {
  Lexer lex;
  Token tok;
  explicit Parser(const std::string& s) : lex(s) { tok = lex.next(); }

  void advance() { tok = lex.next(); }

  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(what + " at offset " + std::to_string(tok.pos));
  }

  Formula parse_implies() {
    Formula left = parse_or();
    if (tok.kind == Token::Implies) {
      advance();
      return f_implies(left, parse_implies());
    }
    return left;
  }

  Formula parse_or() {
    Formula left = parse_and();
    while (tok.kind == Token::Or) {
      advance();
      left = f_or(left, parse_and());
    }
    return left;
  }

  Formula parse_and() {
    Formula left = parse_until();
    while (tok.kind == Token::And) {
      advance();
      left = f_and(left, parse_until());
    }
    return left;
  }

  Formula parse_until() {
    Formula left = parse_unary();
    if (tok.kind == Token::Until) {
      advance();
      return f_until(left, parse_until());
    }
    return left;
  }

  Formula parse_unary() {
    switch (tok.kind) {
      case Token::Not: advance(); return f_not(parse_unary());
      case Token::Next: advance(); return f_next(parse_unary());
      case Token::Glob: advance(); return f_globally(parse_unary());
      case Token::Event: advance(); return f_eventually(parse_unary());
      case Token::Rel: advance(); return f_rel(parse_unary());
      case Token::KwTrue: advance(); return f_true();
      case Token::KwFalse: advance(); return f_false();
      case Token::Atom: {
        std::string name = tok.text;
        advance();
        return f_atom(name);
      }
      case Token::LPar: {
        advance();
        Formula inner = parse_implies();
        if (tok.kind != Token::RPar) fail("expected ')'");
        advance();
        return inner;
      }
      default: fail("expected formula");
    }
  }
};

}  // namespace

Formula parse_formula(const std::string& text) {
  Parser p(text);
  Formula f = p.parse_implies();
  if (p.tok.kind != Token::End) p.fail("trailing input");
  return f;
}

// --------------------------------------------------------------- printing

namespace {

// Precedence levels: implies 0, or 1, and 2, until 3, unary 4/atomic.
// Sugar for F/G/or/implies/false is re-detected so output stays readable;
// re-parsing the output yields the identical desugared tree.
void print(const Formula& f, int level, std::string& out) {
  switch (f->op) {
    case FOp::True:
      out += "true";
      return;
    case FOp::Atom:
      out += f->atom;
      return;
    case FOp::Until: {
      if (f->lhs->op == FOp::True) {  // F sugar
        out += "F ";
        print(f->rhs, 4, out);
        return;
      }
      bool paren = 3 < level;
      if (paren) out += "(";
      print(f->lhs, 4, out);
      out += " U ";
      print(f->rhs, 3, out);
      if (paren) out += ")";
      return;
    }
    case FOp::And: {
      bool paren = 2 < level;
      if (paren) out += "(";
      print(f->lhs, 2, out);
      out += " & ";
      print(f->rhs, 3, out);
      if (paren) out += ")";
      return;
    }
    case FOp::Next:
      out += "X ";
      print(f->lhs, 4, out);
      return;
    case FOp::Rel:
      out += "R ";
      print(f->lhs, 4, out);
      return;
    case FOp::Not: {
      const Formula& a = f->lhs;
      if (a->op == FOp::True) {
        out += "false";
        return;
      }
      if (a->op == FOp::Until && a->lhs->op == FOp::True && a->rhs->op == FOp::Not) {  // G sugar
        out += "G ";
        print(a->rhs->lhs, 4, out);
        return;
      }
      if (a->op == FOp::And && a->lhs->op == FOp::Not && a->rhs->op == FOp::Not) {  // or sugar
        bool paren = 1 < level;
        if (paren) out += "(";
        print(a->lhs->lhs, 1, out);
        out += " | ";
        print(a->rhs->lhs, 2, out);
        if (paren) out += ")";
        return;
      }
      if (a->op == FOp::And && a->rhs->op == FOp::Not) {  // implies sugar
        bool paren = 0 < level;
        if (paren) out += "(";
        print(a->lhs, 1, out);
        out += " -> ";
        print(a->rhs->lhs, 0, out);
        if (paren) out += ")";
        return;
      }
      out += "! ";
      print(a, 4, out);
      return;
    }
  }
}

}  // namespace

std::string format_formula(const Formula& f) {
  std::string out;
  print(f, 0, out);
  return out;
}

}  // namespace unisynt
