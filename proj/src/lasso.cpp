#include "unisynt/lasso.hpp"

#include <map>
#include <set>

namespace unisynt {

int lasso_normalize(const LassoWord& w, int i) {
  int s = static_cast<int>(w.stem.size());
  int l = static_cast<int>(w.loop.size());
  if (i < s) return i;
  return s + (i - s) % l;
}

const Props& lasso_letter(const LassoWord& w, int i) {
  int n = lasso_normalize(w, i);
  int s = static_cast<int>(w.stem.size());
  return n < s ? w.stem[n] : w.loop[n - s];
}

namespace {

struct Evaluator {
  const LassoWord& w;
  std::map<std::pair<const FormulaNode*, int>, bool> memo;

  bool eval(const Formula& f, int i) {
    i = lasso_normalize(w, i);
    auto key = std::make_pair(f.get(), i);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    bool v = false;
    switch (f->op) {
      case FOp::True: v = true; break;
      case FOp::Atom: v = props_contains(lasso_letter(w, i), f->atom); break;
      case FOp::Not: v = !eval(f->lhs, i); break;
      case FOp::And: v = eval(f->lhs, i) && eval(f->rhs, i); break;
      case FOp::Next: v = eval(f->lhs, i + 1); break;
      case FOp::Until: {
        v = false;
        std::set<int> seen;
        for (int j = i;; ++j) {
          int n = lasso_normalize(w, j);
          if (!seen.insert(n).second) break;  // looped without rhs holding
          if (eval(f->rhs, n)) { v = true; break; }
          if (!eval(f->lhs, n)) break;
        }
        break;
      }
      case FOp::Rel:
        throw UnisyntError("eval_ltl_lasso: R modality is not evaluable on a single word");
    }
    memo[key] = v;
    return v;
  }
};

}  // namespace

bool eval_ltl_lasso(const Formula& f, const LassoWord& w, int i) {
  if (w.loop.empty()) throw UnisyntError("eval_ltl_lasso: empty loop");
  Evaluator ev{w, {}};
  return ev.eval(f, i);
}

std::string lasso_format(const LassoWord& w) {
  std::string out;
  for (const auto& p : w.stem) out += "{" + props_format(p) + "}";
  out += "(";
  for (const auto& p : w.loop) out += "{" + props_format(p) + "}";
  out += ")^w";
  return out;
}

}  // namespace unisynt
