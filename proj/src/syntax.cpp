#include "kappa/syntax.hpp"

#include <cctype>
#include <functional>

#include "kappa/error.hpp"
#include "kappa/relativize.hpp"

namespace kappa {

SExpr sx_atom(const std::string& s) {
  SExpr e;
  e.is_atom = true;
  e.atom = s;
  return e;
}

SExpr sx_list(std::vector<SExpr> items) {
  SExpr e;
  e.items = std::move(items);
  return e;
}

namespace {

SExpr binder(const std::string& x, SExpr t) { return sx_list({sx_atom(x), std::move(t)}); }

bool is_number(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

[[noreturn]] void syntax_error(const SExpr& e, const std::string& msg) {
  fail(ErrorCode::Syntax, e.where() + ": " + msg);
}

const std::string& atom_of(const SExpr& e, const char* what) {
  if (!e.is_atom) syntax_error(e, std::string("expected ") + what);
  return e.atom;
}

void want_len(const SExpr& e, size_t n, const char* form) {
  if (e.items.size() != n)
    syntax_error(e, std::string(form) + " takes " + std::to_string(n - 1) + " argument(s)");
}

void want_min(const SExpr& e, size_t n, const char* form) {
  if (e.items.size() < n)
    syntax_error(e, std::string(form) + " takes at least " + std::to_string(n - 1) + " argument(s)");
}

std::uint64_t to_number(const SExpr& e) {
  try {
    return std::stoull(e.atom);
  } catch (const std::exception&) {
    syntax_error(e, "numeral out of range: " + e.atom);
  }
}

}  // namespace

// ---- printing: logic ----

SExpr to_sexpr(const Sort& s) {
  if (s.is_base()) return sx_atom(s.name());
  std::vector<SExpr> items{sx_atom("->")};
  Sort cur = s;
  while (cur.is_arrow()) {
    items.push_back(to_sexpr(cur.dom()));
    cur = cur.cod();
  }
  items.push_back(to_sexpr(cur));
  return sx_list(std::move(items));
}

SExpr to_sexpr(const Individual& t) {
  if (t.is_var()) return sx_atom(t.name());
  if (t.is_const()) {
    if (t.inst().empty()) return sx_atom(t.name());
    std::vector<SExpr> items{sx_atom("@"), sx_atom(t.name())};
    for (const auto& s : t.inst()) items.push_back(to_sexpr(s));
    return sx_list(std::move(items));
  }
  std::vector<Individual> args;
  Individual h = t;
  while (h.is_app()) {
    args.push_back(h.arg());
    h = h.fun();
  }
  std::vector<SExpr> items{to_sexpr(h)};
  for (auto it = args.rbegin(); it != args.rend(); ++it) items.push_back(to_sexpr(*it));
  return sx_list(std::move(items));
}

namespace {

bool is_not(const Formula& a) { return a.is(Formula::Kind::Imp) && a.rhs().is(Formula::Kind::Bot); }

}  // namespace

SExpr to_sexpr(const Formula& a) {
  using K = Formula::Kind;
  switch (a.kind()) {
    case K::Bot: return sx_atom("bot");
    case K::Atom: {
      if (a.args().empty()) return sx_atom(a.pred());
      std::vector<SExpr> items{sx_atom(a.pred())};
      for (const auto& t : a.args()) items.push_back(to_sexpr(t));
      return sx_list(std::move(items));
    }
    case K::Imp: {
      if (is_not(a)) {
        const Formula& b = a.lhs();
        if (b.is(K::Atom) && b.pred() == kNeq)
          return sx_list({sx_atom("eq"), to_sexpr(b.args()[0]), to_sexpr(b.args()[1])});
        if (b.is(K::Forall) && is_not(b.body()))
          return sx_list({sx_atom("exists"), binder(b.var(), to_sexpr(b.sort())), to_sexpr(b.body().lhs())});
        if (b.is(K::And) && is_not(b.lhs()) && is_not(b.rhs()))
          return sx_list({sx_atom("or"), to_sexpr(b.lhs().lhs()), to_sexpr(b.rhs().lhs())});
        return sx_list({sx_atom("not"), to_sexpr(b)});
      }
      std::vector<SExpr> items{sx_atom("imp")};
      Formula cur = a;
      while (cur.is(K::Imp) && !is_not(cur)) {
        items.push_back(to_sexpr(cur.lhs()));
        cur = cur.rhs();
      }
      items.push_back(to_sexpr(cur));
      return sx_list(std::move(items));
    }
    case K::And: return sx_list({sx_atom("and"), to_sexpr(a.lhs()), to_sexpr(a.rhs())});
    case K::Forall: return sx_list({sx_atom("forall"), binder(a.var(), to_sexpr(a.sort())), to_sexpr(a.body())});
  }
  fail(ErrorCode::Internal, "bad formula");
}

SExpr to_sexpr(const AxiomInstance& in) {
  std::vector<SExpr> items{sx_atom("ax"), sx_atom(in.name)};
  for (const auto& s : in.sorts) items.push_back(to_sexpr(s));
  auto vars = [](const char* head, const std::vector<SortedVar>& vs) {
    std::vector<SExpr> it{sx_atom(head)};
    for (const auto& [x, s] : vs) it.push_back(binder(x, to_sexpr(s)));
    return sx_list(std::move(it));
  };
  if (!in.binders.empty()) items.push_back(vars("bind", in.binders));
  if (!in.params.empty()) items.push_back(vars("params", in.params));
  if (in.formula) items.push_back(sx_list({sx_atom("formula"), to_sexpr(in.formula)}));
  return sx_list(std::move(items));
}

SExpr to_sexpr(const Proof& p) {
  using R = Proof::Rule;
  switch (p.rule()) {
    case R::Id: return sx_list({sx_atom("id"), sx_atom(p.name())});
    case R::Ax: return to_sexpr(p.axiom());
    case R::ImpIntro: return sx_list({sx_atom("imp-intro"), sx_atom(p.name()), to_sexpr(p.formula()), to_sexpr(p.left())});
    case R::ImpElim: {
      std::vector<Proof> args;
      Proof h = p;
      while (h.rule() == R::ImpElim) {
        args.push_back(h.right());
        h = h.left();
      }
      std::vector<SExpr> items{sx_atom("imp-elim"), to_sexpr(h)};
      for (auto it = args.rbegin(); it != args.rend(); ++it) items.push_back(to_sexpr(*it));
      return sx_list(std::move(items));
    }
    case R::AndIntro: return sx_list({sx_atom("and-intro"), to_sexpr(p.left()), to_sexpr(p.right())});
    case R::AndElim: return sx_list({sx_atom("and-elim"), sx_atom(std::to_string(p.index())), to_sexpr(p.left())});
    case R::ForallIntro:
      return sx_list({sx_atom("forall-intro"), binder(p.name(), to_sexpr(p.sort())), to_sexpr(p.left())});
    case R::ForallElim: {
      std::vector<Individual> args;
      Proof h = p;
      while (h.rule() == R::ForallElim) {
        args.push_back(h.term());
        h = h.left();
      }
      std::vector<SExpr> items{sx_atom("forall-elim"), to_sexpr(h)};
      for (auto it = args.rbegin(); it != args.rend(); ++it) items.push_back(to_sexpr(*it));
      return sx_list(std::move(items));
    }
    case R::BotIntro: return sx_list({sx_atom("bot-intro"), sx_atom(p.name()), to_sexpr(p.left())});
    case R::BotElim:
      return sx_list({sx_atom("bot-elim"), sx_atom(p.name()), to_sexpr(p.formula()), to_sexpr(p.left())});
  }
  fail(ErrorCode::Internal, "bad proof");
}

// ---- printing: lambda-mu ----

SExpr to_sexpr(const LmType& a) {
  using K = LmType::Kind;
  switch (a.kind()) {
    case K::Nat: return sx_atom("nat");
    case K::Bot: return sx_atom("bot");
    case K::Prod: return sx_list({sx_atom("*"), to_sexpr(a.left()), to_sexpr(a.right())});
    case K::Arrow: {
      std::vector<SExpr> items{sx_atom("->")};
      LmType cur = a;
      while (cur.is(K::Arrow)) {
        items.push_back(to_sexpr(cur.left()));
        cur = cur.right();
      }
      items.push_back(to_sexpr(cur));
      return sx_list(std::move(items));
    }
  }
  fail(ErrorCode::Internal, "bad type");
}

SExpr to_sexpr(const LmTerm& m) {
  using K = LmTerm::Kind;
  switch (m.kind()) {
    case K::Var: return sx_atom(m.name());
    case K::Num: return sx_atom(std::to_string(m.number()));
    case K::Succ: return sx_atom("succ");
    case K::Pred: return sx_atom("pred");
    case K::Ifz: return sx_list({sx_atom("ifz"), to_sexpr(m.type())});
    case K::Fix: return sx_list({sx_atom("fix"), to_sexpr(m.type())});
    case K::Lam: return sx_list({sx_atom("lam"), binder(m.name(), to_sexpr(m.type())), to_sexpr(m.left())});
    case K::Mu: return sx_list({sx_atom("mu"), binder(m.name(), to_sexpr(m.type())), to_sexpr(m.left())});
    case K::Named: return sx_list({sx_atom("name"), sx_atom(m.name()), to_sexpr(m.left())});
    case K::Pair: return sx_list({sx_atom("pair"), to_sexpr(m.left()), to_sexpr(m.right())});
    case K::Proj: return sx_list({sx_atom("proj"), sx_atom(std::to_string(m.index())), to_sexpr(m.left())});
    case K::App: {
      std::vector<LmTerm> args;
      LmTerm h = m;
      while (h.is(K::App)) {
        args.push_back(h.right());
        h = h.left();
      }
      std::vector<SExpr> items{to_sexpr(h)};
      for (auto it = args.rbegin(); it != args.rend(); ++it) items.push_back(to_sexpr(*it));
      return sx_list(std::move(items));
    }
  }
  fail(ErrorCode::Internal, "bad term");
}

std::string to_string(const Sort& s) { return to_string(to_sexpr(s)); }
std::string to_string(const Individual& t) { return to_string(to_sexpr(t)); }
std::string to_string(const Formula& a) { return to_string(to_sexpr(a)); }
std::string to_string(const Proof& p) { return to_string(to_sexpr(p)); }
std::string to_string(const LmType& a) { return to_string(to_sexpr(a)); }
std::string to_string(const LmTerm& m) { return to_string(to_sexpr(m)); }

namespace {

void pretty_into(const SExpr& e, int indent, int width, std::string& out) {
  std::string flat = to_string(e);
  if (e.is_atom || indent + static_cast<int>(flat.size()) <= width || e.items.empty()) {
    out += flat;
    return;
  }
  out += "(";
  pretty_into(e.items[0], indent + 1, width, out);
  size_t i = 1;
  // Keep short atoms (names, indices) on the head line.
  while (i < e.items.size() && e.items[i].is_atom && e.items.size() - i > 1) {
    out += " " + e.items[i].atom;
    ++i;
  }
  for (; i < e.items.size(); ++i) {
    out += "\n" + std::string(indent + 2, ' ');
    pretty_into(e.items[i], indent + 2, width, out);
  }
  out += ")";
}

}  // namespace

std::string pretty(const SExpr& e, int width) {
  std::string out;
  pretty_into(e, 0, width, out);
  return out;
}

// ---- parsing: sorts ----

bool looks_like_sort(const SExpr& e) { return e.is("i") || e.head_is("->"); }

Sort parse_sort(const SExpr& e) {
  if (e.is_atom) {
    if (e.atom == "i") return Sort::iota();
    syntax_error(e, "unknown sort " + e.atom);
  }
  if (!e.head_is("->")) syntax_error(e, "expected a sort");
  want_min(e, 3, "->");
  Sort r = parse_sort(e.items.back());
  for (size_t i = e.items.size() - 2; i >= 1; --i) r = Sort::arrow(parse_sort(e.items[i]), r);
  return r;
}

// ---- parsing: individuals with sort inference ----

namespace {

// Metavariables are base sorts named ?n; surface sorts can never be named so.
class SortUnifier {
 public:
  Sort fresh() { return Sort::base("?" + std::to_string(next_++)); }

  static bool is_meta(const Sort& s) { return s.is_base() && !s.name().empty() && s.name()[0] == '?'; }

  Sort walk(Sort s) const {
    while (is_meta(s)) {
      auto it = sol_.find(s.name());
      if (it == sol_.end()) break;
      s = it->second;
    }
    return s;
  }

  Sort resolve(const Sort& s) const {
    Sort w = walk(s);
    if (w.is_arrow()) return Sort::arrow(resolve(w.dom()), resolve(w.cod()));
    return w;
  }

  bool ground(const Sort& s) const {
    Sort w = walk(s);
    if (w.is_arrow()) return ground(w.dom()) && ground(w.cod());
    return !is_meta(w);
  }

  void unify(const Sort& a, const Sort& b, const SExpr& at) {
    Sort x = walk(a), y = walk(b);
    if (is_meta(x) && is_meta(y) && x.name() == y.name()) return;
    if (is_meta(x)) return bind(x, y, at);
    if (is_meta(y)) return bind(y, x, at);
    if (x.is_base() && y.is_base()) {
      if (x.name() != y.name()) mismatch(a, b, at);
      return;
    }
    if (x.is_base() != y.is_base()) mismatch(a, b, at);
    unify(x.dom(), y.dom(), at);
    unify(x.cod(), y.cod(), at);
  }

 private:
  std::map<std::string, Sort> sol_;
  int next_ = 0;

  bool occurs(const std::string& m, const Sort& s) const {
    Sort w = walk(s);
    if (w.is_arrow()) return occurs(m, w.dom()) || occurs(m, w.cod());
    return is_meta(w) && w.name() == m;
  }

  void bind(const Sort& m, const Sort& s, const SExpr& at) {
    if (occurs(m.name(), s)) fail(ErrorCode::IllSorted, at.where() + ": cyclic sort constraint");
    sol_[m.name()] = s;
  }

  [[noreturn]] void mismatch(const Sort& a, const Sort& b, const SExpr& at) const {
    fail(ErrorCode::IllSorted,
         at.where() + ": sort " + to_string(resolve(a)) + " does not match " + to_string(resolve(b)) + " in " +
             to_string(at));
  }
};

class IndParser {
 public:
  IndParser(const Scope& scope, const Theory& th) : scope_(scope), th_(th) {}

  // Parses and returns the (possibly open) individual and its sort.
  std::pair<Individual, Sort> parse(const SExpr& e) {
    if (e.is_atom) return atom(e);
    if (e.items.empty()) syntax_error(e, "empty application");
    if (e.head_is("@")) return explicit_inst(e);
    if (e.items.size() == 1) return parse(e.items[0]);
    auto [f, fs] = parse(e.items[0]);
    for (size_t i = 1; i < e.items.size(); ++i) {
      auto [a, as] = parse(e.items[i]);
      Sort res = u_.fresh();
      u_.unify(fs, Sort::arrow(as, res), e);
      f = Individual::app(f, a);
      fs = res;
    }
    return {f, fs};
  }

  void expect(const Sort& have, const Sort& want, const SExpr& at) { u_.unify(have, want, at); }

  Individual finish(const Individual& t, const SExpr& at) const {
    switch (t.kind()) {
      case Individual::Kind::Var: return t;
      case Individual::Kind::App: return Individual::app(finish(t.fun(), at), finish(t.arg(), at));
      case Individual::Kind::Const: {
        if (t.inst().empty()) return t;
        std::vector<Sort> inst;
        for (const auto& s : t.inst()) {
          if (!u_.ground(s))
            fail(ErrorCode::IllSorted, at.where() + ": cannot infer the sort instance of " + t.name() +
                                           " in " + to_string(at) + "; write (@ " + t.name() + " ...)");
          inst.push_back(u_.resolve(s));
        }
        return Individual::constant(t.name(), inst);
      }
    }
    return t;
  }

  Sort finish_sort(const Sort& s, const SExpr& at) const {
    if (!u_.ground(s)) fail(ErrorCode::IllSorted, at.where() + ": cannot infer the sort of " + to_string(at));
    return u_.resolve(s);
  }

 private:
  const Scope& scope_;
  const Theory& th_;
  SortUnifier u_;

  std::pair<Individual, Sort> atom(const SExpr& e) {
    const std::string& x = e.atom;
    if (auto it = scope_.find(x); it != scope_.end()) return {Individual::var(x, it->second), it->second};
    if (is_number(x)) {
      Individual t = Individual::constant("0");
      for (std::uint64_t n = to_number(e); n > 0; --n) t = Individual::app(Individual::constant("S"), t);
      return {t, Sort::iota()};
    }
    if (int n = constant_arity(x); n > 0) {
      std::vector<Sort> inst;
      for (int i = 0; i < n; ++i) inst.push_back(u_.fresh());
      return {Individual::constant(x, inst), constant_sort(x, inst)};
    }
    if (is_builtin_constant(x) || th_.constants().count(x))
      return {Individual::constant(x), constant_sort(x, {}, th_.constants())};
    fail(ErrorCode::UnknownIdentifier, e.where() + ": unknown identifier " + x);
  }

  std::pair<Individual, Sort> explicit_inst(const SExpr& e) {
    want_min(e, 2, "@");
    const std::string& x = atom_of(e.items[1], "a constant name");
    std::vector<Sort> inst;
    for (size_t i = 2; i < e.items.size(); ++i) inst.push_back(parse_sort(e.items[i]));
    if (static_cast<int>(inst.size()) != constant_arity(x) || inst.empty())
      syntax_error(e, "wrong number of sort parameters for " + x);
    return {Individual::constant(x, inst), constant_sort(x, inst)};
  }
};

}  // namespace

Individual parse_individual(const SExpr& e, const Scope& scope, const Theory& th) {
  IndParser p(scope, th);
  auto [t, s] = p.parse(e);
  p.finish_sort(s, e);
  return p.finish(t, e);
}

// ---- parsing: formulas ----

namespace {

std::vector<SortedVar> parse_binders(const SExpr& e) {
  // (x s) or ((x s) (y t) ...)
  if (e.is_list() && e.items.size() == 2 && e.items[0].is_atom) {
    if (e.items[1].is_atom || e.items[1].head_is("->"))
      return {{e.items[0].atom, parse_sort(e.items[1])}};
  }
  if (e.is_atom || e.items.empty()) syntax_error(e, "malformed binder, expected (x sort)");
  std::vector<SortedVar> out;
  for (const auto& b : e.items) {
    if (b.is_atom || b.items.size() != 2 || !b.items[0].is_atom) syntax_error(b, "malformed binder, expected (x sort)");
    out.push_back({b.items[0].atom, parse_sort(b.items[1])});
  }
  return out;
}

class FormulaParser {
 public:
  explicit FormulaParser(const Theory& th) : th_(th) {}

  Formula go(const SExpr& e, Scope& scope) {
    if (e.is_atom) {
      if (e.atom == "bot") return Formula::bot();
      return user_atom(e, e.atom, {}, scope);
    }
    if (e.items.empty() || !e.items[0].is_atom) syntax_error(e, "expected a formula");
    const std::string& h = e.items[0].atom;
    if (h == "imp") {
      want_min(e, 3, "imp");
      Formula r = go(e.items.back(), scope);
      for (size_t i = e.items.size() - 2; i >= 1; --i) r = Formula::imp(go(e.items[i], scope), r);
      return r;
    }
    if (h == "and") {
      want_len(e, 3, "and");
      return Formula::conj(go(e.items[1], scope), go(e.items[2], scope));
    }
    if (h == "or") {
      want_len(e, 3, "or");
      return f_or(go(e.items[1], scope), go(e.items[2], scope));
    }
    if (h == "not") {
      want_len(e, 2, "not");
      return f_not(go(e.items[1], scope));
    }
    if (h == "forall" || h == "exists" || h == "forall-r" || h == "exists-r") return quant(e, h, scope);
    if (h == "neq" || h == "eq") {
      want_len(e, 3, h.c_str());
      IndParser p(scope, th_);
      auto [t, ts] = p.parse(e.items[1]);
      auto [u, us] = p.parse(e.items[2]);
      p.expect(ts, us, e);
      p.finish_sort(ts, e);
      Formula a = Formula::neq(p.finish(t, e), p.finish(u, e));
      return h == "eq" ? f_not(a) : a;
    }
    if (h == kRel) {
      want_len(e, 2, "r");
      IndParser p(scope, th_);
      auto [t, ts] = p.parse(e.items[1]);
      p.expect(ts, Sort::iota(), e);
      return Formula::rel(p.finish(t, e));
    }
    return user_atom(e, h, std::vector<SExpr>(e.items.begin() + 1, e.items.end()), scope);
  }

 private:
  const Theory& th_;

  Formula quant(const SExpr& e, const std::string& h, Scope& scope) {
    want_len(e, 3, h.c_str());
    auto vars = parse_binders(e.items[1]);
    std::vector<std::optional<Sort>> saved;
    for (const auto& [x, s] : vars) {
      auto it = scope.find(x);
      saved.push_back(it == scope.end() ? std::nullopt : std::optional<Sort>(it->second));
      scope[x] = s;
    }
    Formula body = go(e.items[2], scope);
    for (size_t i = vars.size(); i-- > 0;) {
      if (saved[i])
        scope[vars[i].first] = *saved[i];
      else
        scope.erase(vars[i].first);
    }
    bool exists = h == "exists" || h == "exists-r";
    bool rel = h == "forall-r" || h == "exists-r";
    if (exists) body = f_not(body);
    for (size_t i = vars.size(); i-- > 0;) {
      const auto& [x, s] = vars[i];
      if (rel) body = Formula::imp(rel_sort_pred(Individual::var(x, s), s), body);
      body = Formula::forall(x, s, body);
    }
    return exists ? f_not(body) : body;
  }

  Formula user_atom(const SExpr& e, const std::string& name, const std::vector<SExpr>& args, Scope& scope) {
    auto it = th_.predicates().find(name);
    if (it == th_.predicates().end()) fail(ErrorCode::UnknownIdentifier, e.where() + ": unknown predicate " + name);
    const Predicate& p = it->second;
    if (args.size() != p.args.size())
      syntax_error(e, name + " takes " + std::to_string(p.args.size()) + " argument(s)");
    IndParser ip(scope, th_);
    std::vector<Individual> ts;
    for (size_t i = 0; i < args.size(); ++i) {
      auto [t, s] = ip.parse(args[i]);
      ip.expect(s, p.args[i], args[i]);
      ts.push_back(t);
    }
    for (auto& t : ts) t = ip.finish(t, e);
    return Formula::atom(name, ts, p.negative);
  }
};

}  // namespace

Formula parse_formula(const SExpr& e, const Scope& scope, const Theory& th) {
  Scope s = scope;
  return FormulaParser(th).go(e, s);
}

// ---- parsing: proofs ----

namespace {

class ProofParser {
 public:
  explicit ProofParser(const Theory& th) : th_(th) {}

  Proof go(const SExpr& e, Scope& scope) {
    if (e.is_atom || e.items.empty() || !e.items[0].is_atom) syntax_error(e, "expected a proof");
    const std::string& h = e.items[0].atom;
    if (h == "id") {
      want_len(e, 2, "id");
      return Proof::id(atom_of(e.items[1], "a hypothesis name"));
    }
    if (h == "ax") return Proof::ax(axiom(e, scope));
    if (h == "imp-intro") {
      want_len(e, 4, "imp-intro");
      return Proof::imp_intro(atom_of(e.items[1], "a hypothesis name"), parse_formula(e.items[2], scope, th_),
                              go(e.items[3], scope));
    }
    if (h == "imp-elim") {
      want_min(e, 3, "imp-elim");
      Proof p = go(e.items[1], scope);
      for (size_t i = 2; i < e.items.size(); ++i) p = Proof::imp_elim(p, go(e.items[i], scope));
      return p;
    }
    if (h == "and-intro") {
      want_len(e, 3, "and-intro");
      return Proof::and_intro(go(e.items[1], scope), go(e.items[2], scope));
    }
    if (h == "and-elim") {
      want_len(e, 3, "and-elim");
      const std::string& i = atom_of(e.items[1], "1 or 2");
      if (i != "1" && i != "2") syntax_error(e.items[1], "and-elim index must be 1 or 2");
      return Proof::and_elim(i == "1" ? 1 : 2, go(e.items[2], scope));
    }
    if (h == "forall-intro") {
      want_len(e, 3, "forall-intro");
      auto vars = parse_binders(e.items[1]);
      if (vars.size() != 1) syntax_error(e.items[1], "forall-intro binds one variable");
      const auto& [x, s] = vars[0];
      std::optional<Sort> saved;
      if (auto it = scope.find(x); it != scope.end()) saved = it->second;
      scope[x] = s;
      Proof body = go(e.items[2], scope);
      if (saved)
        scope[x] = *saved;
      else
        scope.erase(x);
      return Proof::forall_intro(x, s, body);
    }
    if (h == "forall-elim") {
      want_min(e, 3, "forall-elim");
      Proof p = go(e.items[1], scope);
      for (size_t i = 2; i < e.items.size(); ++i)
        p = Proof::forall_elim(p, parse_individual(e.items[i], scope, th_));
      return p;
    }
    if (h == "bot-intro") {
      want_len(e, 3, "bot-intro");
      return Proof::bot_intro(atom_of(e.items[1], "a label"), go(e.items[2], scope));
    }
    if (h == "bot-elim") {
      want_len(e, 4, "bot-elim");
      return Proof::bot_elim(atom_of(e.items[1], "a label"), parse_formula(e.items[2], scope, th_),
                             go(e.items[3], scope));
    }
    syntax_error(e, "unknown proof rule " + h);
  }

 private:
  const Theory& th_;

  AxiomInstance axiom(const SExpr& e, const Scope& scope) {
    want_min(e, 2, "ax");
    AxiomInstance in;
    in.name = atom_of(e.items[1], "an axiom name");
    Scope inner = scope;
    const SExpr* formula = nullptr;
    for (size_t i = 2; i < e.items.size(); ++i) {
      const SExpr& it = e.items[i];
      if (looks_like_sort(it)) {
        in.sorts.push_back(parse_sort(it));
      } else if (it.head_is("bind") || it.head_is("params")) {
        auto& dst = it.head_is("bind") ? in.binders : in.params;
        for (size_t j = 1; j < it.items.size(); ++j) {
          auto vs = parse_binders(it.items[j]);
          for (auto& v : vs) {
            inner[v.first] = v.second;
            dst.push_back(v);
          }
        }
      } else if (it.head_is("formula")) {
        want_len(it, 2, "formula");
        formula = &it.items[1];
      } else {
        syntax_error(it, "unexpected item in axiom reference");
      }
    }
    if (formula) in.formula = parse_formula(*formula, inner, th_);
    return in;
  }
};

}  // namespace

Proof parse_proof(const SExpr& e, const Scope& scope, const Theory& th) {
  Scope s = scope;
  return ProofParser(th).go(e, s);
}

// ---- parsing: lambda-mu ----

LmType parse_lm_type(const SExpr& e) {
  if (e.is("nat")) return LmType::nat();
  if (e.is("bot")) return LmType::bot();
  if (e.head_is("->")) {
    want_min(e, 3, "->");
    LmType r = parse_lm_type(e.items.back());
    for (size_t i = e.items.size() - 2; i >= 1; --i) r = LmType::arrow(parse_lm_type(e.items[i]), r);
    return r;
  }
  if (e.head_is("*")) {
    want_len(e, 3, "*");
    return LmType::prod(parse_lm_type(e.items[1]), parse_lm_type(e.items[2]));
  }
  syntax_error(e, "expected a type");
}

LmTerm parse_lm_term(const SExpr& e) {
  if (e.is_atom) {
    const std::string& x = e.atom;
    if (is_number(x)) return LmTerm::num(to_number(e));
    if (x == "succ") return LmTerm::succ();
    if (x == "pred") return LmTerm::pred();
    return LmTerm::var(x);
  }
  if (e.items.empty()) syntax_error(e, "empty application");
  const SExpr& h = e.items[0];
  auto bound = [&](const char* form) {
    want_len(e, 3, form);
    const SExpr& b = e.items[1];
    if (b.is_atom || b.items.size() != 2 || !b.items[0].is_atom)
      syntax_error(b, std::string("malformed ") + form + " binder, expected (x type)");
    return std::make_pair(b.items[0].atom, parse_lm_type(b.items[1]));
  };
  if (h.is("ifz") || h.is("fix") || h.is("omega")) {
    want_len(e, 2, h.atom.c_str());
    LmType a = parse_lm_type(e.items[1]);
    if (h.is("ifz")) return LmTerm::ifz(a);
    if (h.is("fix")) return LmTerm::fix(a);
    return mk_omega(a);
  }
  if (h.is("lam")) {
    auto [x, a] = bound("lam");
    return LmTerm::lam(x, a, parse_lm_term(e.items[2]));
  }
  if (h.is("mu")) {
    auto [x, a] = bound("mu");
    return LmTerm::mu(x, a, parse_lm_term(e.items[2]));
  }
  if (h.is("name")) {
    want_len(e, 3, "name");
    return LmTerm::named(atom_of(e.items[1], "a label"), parse_lm_term(e.items[2]));
  }
  if (h.is("pair")) {
    want_len(e, 3, "pair");
    return LmTerm::pair(parse_lm_term(e.items[1]), parse_lm_term(e.items[2]));
  }
  if (h.is("proj")) {
    want_len(e, 3, "proj");
    const std::string& i = atom_of(e.items[1], "1 or 2");
    if (i != "1" && i != "2") syntax_error(e.items[1], "projection index must be 1 or 2");
    return LmTerm::proj(i == "1" ? 1 : 2, parse_lm_term(e.items[2]));
  }
  LmTerm f = parse_lm_term(h);
  for (size_t i = 1; i < e.items.size(); ++i) f = LmTerm::app(f, parse_lm_term(e.items[i]));
  return f;
}

}  // namespace kappa
