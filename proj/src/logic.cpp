#include "kappa/logic.hpp"

#include <algorithm>

#include "kappa/error.hpp"
#include "kappa/syntax.hpp"

namespace kappa {

// ---- sorts ----

Sort Sort::base(const std::string& name) {
  Sort s;
  s.node_ = std::make_shared<Node>(Node{name, {}, {}});
  return s;
}

Sort Sort::iota() {
  static const Sort i = base("i");
  return i;
}

Sort Sort::arrow(const Sort& dom, const Sort& cod) {
  Sort s;
  s.node_ = std::make_shared<Node>(Node{"", dom, cod});
  return s;
}

Sort Sort::arrows(const std::vector<Sort>& doms, const Sort& cod) {
  Sort r = cod;
  for (auto it = doms.rbegin(); it != doms.rend(); ++it) r = arrow(*it, r);
  return r;
}

bool Sort::is_base() const { return !node_->name.empty(); }
bool Sort::is_iota() const { return is_base() && node_->name == "i"; }
const std::string& Sort::name() const { return node_->name; }
const Sort& Sort::dom() const { return node_->dom; }
const Sort& Sort::cod() const { return node_->cod; }

bool operator==(const Sort& a, const Sort& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  if (a.is_base() || b.is_base()) return a.is_base() && b.is_base() && a.name() == b.name();
  return a.dom() == b.dom() && a.cod() == b.cod();
}

// ---- individuals ----

Individual Individual::constant(const std::string& name, std::vector<Sort> inst) {
  Individual t;
  t.node_ = std::make_shared<Node>(Node{Kind::Const, name, std::move(inst), {}, {}, {}});
  return t;
}

Individual Individual::var(const std::string& name, const Sort& sort) {
  Individual t;
  t.node_ = std::make_shared<Node>(Node{Kind::Var, name, {}, sort, {}, {}});
  return t;
}

Individual Individual::app(const Individual& f, const Individual& a) {
  Individual t;
  t.node_ = std::make_shared<Node>(Node{Kind::App, "", {}, {}, f, a});
  return t;
}

Individual Individual::apps(Individual f, const std::vector<Individual>& args) {
  for (const auto& a : args) f = app(f, a);
  return f;
}

Individual::Kind Individual::kind() const { return node_->kind; }
const std::string& Individual::name() const { return node_->name; }
const std::vector<Sort>& Individual::inst() const { return node_->inst; }
const Sort& Individual::var_sort() const { return node_->sort; }
const Individual& Individual::fun() const { return node_->fun; }
const Individual& Individual::arg() const { return node_->arg; }

bool operator==(const Individual& a, const Individual& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_ || a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Individual::Kind::Const: return a.name() == b.name() && a.inst() == b.inst();
    case Individual::Kind::Var: return a.name() == b.name() && a.var_sort() == b.var_sort();
    case Individual::Kind::App: return a.fun() == b.fun() && a.arg() == b.arg();
  }
  return false;
}

int constant_arity(const std::string& name) {
  if (name == "k") return 2;
  if (name == "s") return 3;
  if (name == "rec") return 1;
  return 0;
}

bool is_builtin_constant(const std::string& name) {
  return name == "0" || name == "S" || name == "k" || name == "s" || name == "rec";
}

Sort constant_sort(const std::string& name, const std::vector<Sort>& inst, const ConstTable& extra) {
  const Sort i = Sort::iota();
  auto need = [&](size_t n) {
    if (inst.size() != n)
      fail(ErrorCode::IllSorted, "constant " + name + " expects " + std::to_string(n) +
                                     " sort parameters, got " + std::to_string(inst.size()));
  };
  if (name == "0") {
    need(0);
    return i;
  }
  if (name == "S") {
    need(0);
    return Sort::arrow(i, i);
  }
  if (name == "k") {
    need(2);
    return Sort::arrows({inst[0], inst[1]}, inst[0]);
  }
  if (name == "s") {
    need(3);
    const Sort &a = inst[0], &b = inst[1], &c = inst[2];
    return Sort::arrows({Sort::arrows({a, b}, c), Sort::arrow(a, b), a}, c);
  }
  if (name == "rec") {
    need(1);
    const Sort& a = inst[0];
    return Sort::arrows({a, Sort::arrows({i, a}, a), i}, a);
  }
  auto it = extra.find(name);
  if (it == extra.end()) fail(ErrorCode::UnknownIdentifier, "unknown constant " + name);
  need(0);
  return it->second;
}

namespace {

Sort infer_impl(const Individual& t, const std::map<std::string, Sort>* env, const ConstTable& extra) {
  switch (t.kind()) {
    case Individual::Kind::Const: return constant_sort(t.name(), t.inst(), extra);
    case Individual::Kind::Var: {
      if (env) {
        auto it = env->find(t.name());
        if (it == env->end()) fail(ErrorCode::UnknownIdentifier, "unbound variable " + t.name());
        if (it->second != t.var_sort())
          fail(ErrorCode::IllSorted, "variable " + t.name() + " used at sort " +
                                         to_string(t.var_sort()) + " but declared " +
                                         to_string(it->second));
      }
      return t.var_sort();
    }
    case Individual::Kind::App: {
      Sort f = infer_impl(t.fun(), env, extra);
      Sort a = infer_impl(t.arg(), env, extra);
      if (!f.is_arrow())
        fail(ErrorCode::IllSorted, "applying " + to_string(t.fun()) + " of base sort " + to_string(f));
      if (f.dom() != a)
        fail(ErrorCode::IllSorted, "in " + to_string(t) + ": argument sort " + to_string(a) +
                                       " does not match " + to_string(f.dom()));
      return f.cod();
    }
  }
  fail(ErrorCode::Internal, "bad individual");
}

}  // namespace

Sort infer_sort(const Individual& t, const ConstTable& extra) { return infer_impl(t, nullptr, extra); }

Sort infer_sort(const Individual& t, const std::map<std::string, Sort>& env, const ConstTable& extra) {
  return infer_impl(t, &env, extra);
}

// ---- formulas ----

const char* polarity_name(Polarity p) {
  switch (p) {
    case Polarity::Negative: return "negative";
    case Polarity::Positive: return "positive";
    case Polarity::Both: return "both";
  }
  return "?";
}

Formula Formula::atom(const std::string& pred, std::vector<Individual> args, bool negative) {
  Formula f;
  f.node_ = std::make_shared<Node>(Node{Kind::Atom, pred, std::move(args), negative, {}, {}, {}});
  return f;
}

Formula Formula::neq(const Individual& t, const Individual& u) { return atom(kNeq, {t, u}, true); }
Formula Formula::rel(const Individual& t) { return atom(kRel, {t}, false); }

Formula Formula::bot() {
  static const Formula b = [] {
    Formula f;
    f.node_ = std::make_shared<Node>(Node{Kind::Bot, "", {}, true, {}, {}, {}});
    return f;
  }();
  return b;
}

Formula Formula::imp(const Formula& a, const Formula& b) {
  Formula f;
  f.node_ = std::make_shared<Node>(Node{Kind::Imp, "", {}, true, {}, a, b});
  return f;
}

Formula Formula::conj(const Formula& a, const Formula& b) {
  Formula f;
  f.node_ = std::make_shared<Node>(Node{Kind::And, "", {}, true, {}, a, b});
  return f;
}

Formula Formula::forall(const std::string& var, const Sort& sort, const Formula& body) {
  Formula f;
  f.node_ = std::make_shared<Node>(Node{Kind::Forall, var, {}, true, sort, body, {}});
  return f;
}

Formula::Kind Formula::kind() const { return node_->kind; }
const std::string& Formula::pred() const { return node_->name; }
const std::vector<Individual>& Formula::args() const { return node_->args; }
bool Formula::negative_atom() const { return node_->negative; }
const Formula& Formula::lhs() const { return node_->a; }
const Formula& Formula::rhs() const { return node_->b; }
const std::string& Formula::var() const { return node_->name; }
const Sort& Formula::sort() const { return node_->sort; }
const Formula& Formula::body() const { return node_->a; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_ || a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::Atom:
      return a.pred() == b.pred() && a.negative_atom() == b.negative_atom() && a.args() == b.args();
    case Formula::Kind::Bot: return true;
    case Formula::Kind::Imp:
    case Formula::Kind::And: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
    case Formula::Kind::Forall:
      return a.var() == b.var() && a.sort() == b.sort() && a.body() == b.body();
  }
  return false;
}

Formula f_not(const Formula& a) { return Formula::imp(a, Formula::bot()); }
Formula f_or(const Formula& a, const Formula& b) { return f_not(Formula::conj(f_not(a), f_not(b))); }
Formula f_exists(const std::string& var, const Sort& sort, const Formula& body) {
  return f_not(Formula::forall(var, sort, f_not(body)));
}
Formula f_eq(const Individual& t, const Individual& u) { return f_not(Formula::neq(t, u)); }

Formula f_forall_many(const std::vector<std::pair<std::string, Sort>>& vars, const Formula& body) {
  Formula r = body;
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) r = Formula::forall(it->first, it->second, r);
  return r;
}

Formula desugar(Connective c, const DesugarArgs& a) {
  auto arity = [&](size_t nf, size_t nt) {
    if (a.formulas.size() != nf || a.terms.size() != nt)
      fail(ErrorCode::Internal, "desugar: wrong argument count");
  };
  switch (c) {
    case Connective::Not: arity(1, 0); return f_not(a.formulas[0]);
    case Connective::Or: arity(2, 0); return f_or(a.formulas[0], a.formulas[1]);
    case Connective::Exists: arity(1, 0); return f_exists(a.var, a.sort, a.formulas[0]);
    case Connective::Eq: arity(0, 2); return f_eq(a.terms[0], a.terms[1]);
  }
  fail(ErrorCode::Internal, "desugar: bad connective");
}

namespace {

struct Pol {
  bool neg, pos;
};

Pol pol(const Formula& a) {
  switch (a.kind()) {
    case Formula::Kind::Atom: return {a.negative_atom(), !a.negative_atom()};
    case Formula::Kind::Bot: return {true, false};
    case Formula::Kind::Imp: return pol(a.rhs());
    case Formula::Kind::And: {
      Pol l = pol(a.lhs()), r = pol(a.rhs());
      return {l.neg && r.neg, l.pos || r.pos};
    }
    case Formula::Kind::Forall: return pol(a.body());
  }
  return {false, false};
}

}  // namespace

Polarity polarity(const Formula& a) {
  Pol p = pol(a);
  if (p.neg && p.pos) return Polarity::Both;
  return p.neg ? Polarity::Negative : Polarity::Positive;
}

bool is_negative(const Formula& a) { return pol(a).neg; }
bool is_positive(const Formula& a) { return pol(a).pos; }

// ---- variables ----

void free_vars(const Individual& t, VarSet& out) {
  switch (t.kind()) {
    case Individual::Kind::Const: return;
    case Individual::Kind::Var: out.emplace(t.name(), t.var_sort()); return;
    case Individual::Kind::App:
      free_vars(t.fun(), out);
      free_vars(t.arg(), out);
      return;
  }
}

VarSet free_vars(const Individual& t) {
  VarSet s;
  free_vars(t, s);
  return s;
}

void free_vars(const Formula& a, VarSet& out) {
  switch (a.kind()) {
    case Formula::Kind::Atom:
      for (const auto& t : a.args()) free_vars(t, out);
      return;
    case Formula::Kind::Bot: return;
    case Formula::Kind::Imp:
    case Formula::Kind::And:
      free_vars(a.lhs(), out);
      free_vars(a.rhs(), out);
      return;
    case Formula::Kind::Forall: {
      VarSet inner;
      free_vars(a.body(), inner);
      inner.erase(a.var());
      out.insert(inner.begin(), inner.end());
      return;
    }
  }
}

VarSet free_vars(const Formula& a) {
  VarSet s;
  free_vars(a, s);
  return s;
}

bool occurs_free(const std::string& x, const Individual& t) {
  switch (t.kind()) {
    case Individual::Kind::Const: return false;
    case Individual::Kind::Var: return t.name() == x;
    case Individual::Kind::App: return occurs_free(x, t.fun()) || occurs_free(x, t.arg());
  }
  return false;
}

bool occurs_free(const std::string& x, const Formula& a) {
  switch (a.kind()) {
    case Formula::Kind::Atom:
      return std::any_of(a.args().begin(), a.args().end(),
                         [&](const Individual& t) { return occurs_free(x, t); });
    case Formula::Kind::Bot: return false;
    case Formula::Kind::Imp:
    case Formula::Kind::And: return occurs_free(x, a.lhs()) || occurs_free(x, a.rhs());
    case Formula::Kind::Forall: return a.var() != x && occurs_free(x, a.body());
  }
  return false;
}

void all_var_names(const Formula& a, std::set<std::string>& out) {
  switch (a.kind()) {
    case Formula::Kind::Atom: {
      VarSet vs;
      for (const auto& t : a.args()) free_vars(t, vs);
      for (const auto& [n, _] : vs) out.insert(n);
      return;
    }
    case Formula::Kind::Bot: return;
    case Formula::Kind::Imp:
    case Formula::Kind::And:
      all_var_names(a.lhs(), out);
      all_var_names(a.rhs(), out);
      return;
    case Formula::Kind::Forall:
      out.insert(a.var());
      all_var_names(a.body(), out);
      return;
  }
}

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  if (!avoid.count(base)) return base;
  for (int k = 1;; ++k) {
    std::string c = base + "_" + std::to_string(k);
    if (!avoid.count(c)) return c;
  }
}

// ---- substitution ----

Individual subst(const Individual& t, const IndSubst& s) {
  switch (t.kind()) {
    case Individual::Kind::Const: return t;
    case Individual::Kind::Var: {
      auto it = s.find(t.name());
      return it == s.end() ? t : it->second;
    }
    case Individual::Kind::App: {
      Individual f = subst(t.fun(), s), a = subst(t.arg(), s);
      if (f == t.fun() && a == t.arg()) return t;
      return Individual::app(f, a);
    }
  }
  return t;
}

Formula subst(const Formula& a, const IndSubst& s) {
  if (s.empty()) return a;
  switch (a.kind()) {
    case Formula::Kind::Atom: {
      std::vector<Individual> args;
      args.reserve(a.args().size());
      for (const auto& t : a.args()) args.push_back(subst(t, s));
      return Formula::atom(a.pred(), std::move(args), a.negative_atom());
    }
    case Formula::Kind::Bot: return a;
    case Formula::Kind::Imp: return Formula::imp(subst(a.lhs(), s), subst(a.rhs(), s));
    case Formula::Kind::And: return Formula::conj(subst(a.lhs(), s), subst(a.rhs(), s));
    case Formula::Kind::Forall: {
      IndSubst inner;
      for (const auto& [x, t] : s)
        if (x != a.var() && occurs_free(x, a.body())) inner.emplace(x, t);
      if (inner.empty()) return a;
      std::set<std::string> range;
      for (const auto& [x, t] : inner) {
        VarSet fv = free_vars(t);
        for (const auto& [n, _] : fv) range.insert(n);
      }
      if (!range.count(a.var())) return Formula::forall(a.var(), a.sort(), subst(a.body(), inner));
      std::set<std::string> avoid = range;
      for (const auto& [n, _] : free_vars(a.body())) avoid.insert(n);
      for (const auto& [x, _] : inner) avoid.insert(x);
      std::string y = fresh_name(a.var(), avoid);
      inner[a.var()] = Individual::var(y, a.sort());
      return Formula::forall(y, a.sort(), subst(a.body(), inner));
    }
  }
  return a;
}

Formula subst1(const Formula& a, const std::string& x, const Individual& t) {
  return subst(a, IndSubst{{x, t}});
}

// ---- alpha equivalence ----

namespace {

using Binders = std::vector<std::string>;

int bound_index(const Binders& b, const std::string& x) {
  for (int i = static_cast<int>(b.size()) - 1; i >= 0; --i)
    if (b[i] == x) return static_cast<int>(b.size()) - 1 - i;
  return -1;
}

bool alpha_ind(const Individual& s, const Binders& bs, const Individual& t, const Binders& bt) {
  if (s.kind() != t.kind()) return false;
  switch (s.kind()) {
    case Individual::Kind::Const: return s.name() == t.name() && s.inst() == t.inst();
    case Individual::Kind::Var: {
      if (s.var_sort() != t.var_sort()) return false;
      int i = bound_index(bs, s.name()), j = bound_index(bt, t.name());
      if (i != j) return false;
      return i >= 0 || s.name() == t.name();
    }
    case Individual::Kind::App:
      return alpha_ind(s.fun(), bs, t.fun(), bt) && alpha_ind(s.arg(), bs, t.arg(), bt);
  }
  return false;
}

bool alpha_f(const Formula& a, Binders& ba, const Formula& b, Binders& bb) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::Atom: {
      if (a.pred() != b.pred() || a.negative_atom() != b.negative_atom() ||
          a.args().size() != b.args().size())
        return false;
      for (size_t i = 0; i < a.args().size(); ++i)
        if (!alpha_ind(a.args()[i], ba, b.args()[i], bb)) return false;
      return true;
    }
    case Formula::Kind::Bot: return true;
    case Formula::Kind::Imp:
    case Formula::Kind::And: return alpha_f(a.lhs(), ba, b.lhs(), bb) && alpha_f(a.rhs(), ba, b.rhs(), bb);
    case Formula::Kind::Forall: {
      if (a.sort() != b.sort()) return false;
      ba.push_back(a.var());
      bb.push_back(b.var());
      bool r = alpha_f(a.body(), ba, b.body(), bb);
      ba.pop_back();
      bb.pop_back();
      return r;
    }
  }
  return false;
}

}  // namespace

bool alpha_eq(const Formula& a, const Formula& b) {
  if (a == b) return true;
  Binders ba, bb;
  return alpha_f(a, ba, b, bb);
}

}  // namespace kappa
