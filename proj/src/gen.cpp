#include "kappa/gen.hpp"

#include <vector>

namespace kappa {

namespace {

// Whether leaf() can build a term of type t without throwing; has_bot says a
// variable of type bot is in scope.
bool leaf_inhabited(const LmType& t, bool has_bot) {
  switch (t.kind()) {
    case LmType::Kind::Nat: return true;
    case LmType::Kind::Bot: return has_bot;
    case LmType::Kind::Prod: return leaf_inhabited(t.left(), has_bot) && leaf_inhabited(t.right(), has_bot);
    case LmType::Kind::Arrow: return leaf_inhabited(t.right(), has_bot || t.left().is(LmType::Kind::Bot));
  }
  return false;
}

}  // namespace

int TermGen::pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

bool TermGen::coin(double p) { return std::bernoulli_distribution(p)(rng_); }

std::string TermGen::fresh(const char* base) { return base + std::to_string(fresh_++); }

LmType TermGen::type(int depth) {
  int k = depth <= 0 ? pick(4) : pick(7);
  if (k < 3) return LmType::nat();
  if (k == 3) return LmType::bot();
  if (k < 6) return LmType::arrow(type(depth - 1), type(depth - 1));
  return LmType::prod(type(depth - 1), type(depth - 1));
}

LmTerm TermGen::term() {
  LmType t;
  do t = type(2);
  while (t.is(LmType::Kind::Bot) || (!opt_.allow_fix && !leaf_inhabited(t, false)));
  return term(t);
}

LmTerm TermGen::term(const LmType& t) {
  vars_.clear();
  labels_.clear();
  // The outer mu gives every bot position a label to throw to.
  std::string a = fresh("a");
  return LmTerm::mu(a, t, with_label(a, t, opt_.max_depth - 1));
}

LmTerm TermGen::with_var(const std::string& x, const LmType& a, const LmType& t, int depth) {
  auto saved = vars_;
  vars_[x] = a;
  LmTerm body = gen(t, depth);
  vars_ = saved;
  return LmTerm::lam(x, a, body);
}

LmTerm TermGen::with_label(const std::string& a, const LmType& at, int depth) {
  auto saved = labels_;
  labels_[a] = at;
  LmTerm body = gen(LmType::bot(), depth);
  labels_ = saved;
  return body;
}

// Terms of depth zero: variables, numerals and canonical introductions.
LmTerm TermGen::leaf(const LmType& t, int depth) {
  std::vector<std::string> match;
  for (const auto& [x, a] : vars_)
    if (a == t) match.push_back(x);
  if (!match.empty() && (coin(0.7) || t.is(LmType::Kind::Bot))) return LmTerm::var(match[pick(match.size())]);
  switch (t.kind()) {
    case LmType::Kind::Nat: return LmTerm::num(pick(4));
    case LmType::Kind::Arrow: return with_var(fresh("x"), t.left(), t.right(), depth);
    case LmType::Kind::Prod: return LmTerm::pair(leaf(t.left(), depth), leaf(t.right(), depth));
    case LmType::Kind::Bot: {
      std::vector<std::string> ls;
      for (const auto& [a, at] : labels_)
        if (leaf_inhabited(at, false)) ls.push_back(a);
      if (!ls.empty()) {
        std::string a = ls[pick(ls.size())];
        LmType at = labels_.at(a);
        return LmTerm::named(a, leaf(at, depth));
      }
      return mk_omega(t);
    }
  }
  return mk_omega(t);
}

LmTerm TermGen::gen(const LmType& t, int depth) {
  if (depth <= 0) return leaf(t, 0);
  const int d = depth - 1;
  switch (pick(10)) {
    case 0: {  // beta redex
      LmType a = type(1);
      if (a.is(LmType::Kind::Bot) && labels_.empty()) a = LmType::nat();
      return LmTerm::app(with_var(fresh("x"), a, t, d), gen(a, d));
    }
    case 1: {  // projection redex
      LmType b = type(1);
      if (b.is(LmType::Kind::Bot)) b = LmType::nat();
      return coin(0.5) ? LmTerm::proj(1, LmTerm::pair(gen(t, d), gen(b, d)))
                       : LmTerm::proj(2, LmTerm::pair(gen(b, d), gen(t, d)));
    }
    case 2: {  // mu, possibly under an elimination
      std::string a = fresh("a");
      if (coin(0.5) || t.is(LmType::Kind::Bot)) return LmTerm::mu(a, t, with_label(a, t, d));
      LmType b = type(1);
      if (b.is(LmType::Kind::Bot)) b = LmType::nat();
      LmType f = LmType::arrow(b, t);
      return LmTerm::app(LmTerm::mu(a, f, with_label(a, f, d)), gen(b, d));
    }
    case 3:  // ifz at any type
      return LmTerm::apps(LmTerm::ifz(t), {gen(LmType::nat(), d), gen(t, d), gen(t, d)});
    case 4:
      if (opt_.allow_fix && coin(0.3)) {
        std::string x = fresh("x");
        return LmTerm::app(LmTerm::fix(t), with_var(x, t, t, d));
      }
      [[fallthrough]];
    case 5: {  // apply a variable of function type
      for (const auto& [x, a] : vars_)
        if (a.is(LmType::Kind::Arrow) && a.right() == t) {
          // gen() rebinds vars_, so copy before recursing.
          LmTerm f = LmTerm::var(x);
          LmType dom = a.left();
          return LmTerm::app(f, gen(dom, d));
        }
      break;
    }
    default: break;
  }
  switch (t.kind()) {
    case LmType::Kind::Nat:
      switch (pick(3)) {
        case 0: return LmTerm::app(LmTerm::succ(), gen(t, d));
        case 1: return LmTerm::app(LmTerm::pred(), gen(t, d));
        default: return leaf(t, d);
      }
    case LmType::Kind::Arrow: return with_var(fresh("x"), t.left(), t.right(), d);
    case LmType::Kind::Prod: return LmTerm::pair(gen(t.left(), d), gen(t.right(), d));
    case LmType::Kind::Bot: {
      if (!labels_.empty() && coin(0.7)) {
        auto it = labels_.begin();
        std::advance(it, pick(labels_.size()));
        std::string a = it->first;
        LmType at = it->second;
        return LmTerm::named(a, gen(at, d));
      }
      return leaf(t, d);
    }
  }
  return leaf(t, d);
}

}  // namespace kappa
