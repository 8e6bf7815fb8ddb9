#include "kappa/theory.hpp"

#include <algorithm>

#include "kappa/error.hpp"
#include "kappa/relativize.hpp"
#include "kappa/syntax.hpp"

namespace kappa {

bool operator==(const AxiomInstance& a, const AxiomInstance& b) {
  if (a.name != b.name || a.sorts != b.sorts || a.binders != b.binders || a.params != b.params)
    return false;
  if (static_cast<bool>(a.formula) != static_cast<bool>(b.formula)) return false;
  return !a.formula || a.formula == b.formula;
}

std::vector<std::string> builtin_axiom_names(TheoryKind k) {
  std::vector<std::string> v = {"refl", "leib", "snz", "ind", "def-s", "def-k", "def-recz", "def-recs"};
  if (k == TheoryKind::PAwR || k == TheoryKind::CAwR)
    for (const char* n : {"rel0", "rels", "rel-k", "rel-s", "rel-rec"}) v.push_back(n);
  if (k == TheoryKind::CAw || k == TheoryKind::CAwR) v.push_back("dc");
  return v;
}

Theory Theory::make(const std::string& name, TheoryKind k) {
  Theory t;
  t.name_ = name;
  t.kind_ = k;
  return t;
}

Theory Theory::paw() { return make("paw", TheoryKind::PAw); }
Theory Theory::caw() { return make("caw", TheoryKind::CAw); }
Theory Theory::pawr() { return make("pawr", TheoryKind::PAwR); }
Theory Theory::cawr() { return make("cawr", TheoryKind::CAwR); }

Theory Theory::by_name(const std::string& name) {
  if (name == "paw") return paw();
  if (name == "caw") return caw();
  if (name == "pawr") return pawr();
  if (name == "cawr") return cawr();
  fail(ErrorCode::UnknownIdentifier, "unknown theory " + name + " (expected paw, caw, pawr, cawr)");
}

Theory Theory::relativize() const {
  if (relativized()) return *this;
  Theory t = has_choice() ? cawr() : pawr();
  t.constants_ = constants_;
  t.predicates_ = predicates_;
  for (const auto& [n, f] : user_axioms_) t.user_axioms_[n] = rel_formula(f);
  return t;
}

void Theory::add_constant(const std::string& name, const Sort& sort) {
  if (is_builtin_constant(name) || constants_.count(name))
    fail(ErrorCode::Syntax, "constant " + name + " already declared");
  constants_[name] = sort;
}

void Theory::add_predicate(const Predicate& p) {
  if (p.name == kNeq || p.name == kRel || predicates_.count(p.name))
    fail(ErrorCode::Syntax, "predicate " + p.name + " already declared");
  predicates_[p.name] = p;
}

void Theory::add_axiom(const std::string& name, const Formula& f) {
  auto builtin = builtin_axiom_names(kind_);
  if (std::find(builtin.begin(), builtin.end(), name) != builtin.end() || user_axioms_.count(name))
    fail(ErrorCode::Syntax, "axiom " + name + " already declared");
  check_formula(f);
  if (!free_vars(f).empty()) fail(ErrorCode::BadInstance, "axiom " + name + " is not closed");
  user_axioms_[name] = f;
}

bool Theory::has_axiom(const std::string& name) const {
  auto b = builtin_axiom_names(kind_);
  return std::find(b.begin(), b.end(), name) != b.end() || user_axioms_.count(name);
}

bool Theory::is_scheme(const std::string& name) const {
  return name == "leib" || name == "ind" || name == "dc";
}

void Theory::check_individual(const Individual& t) const { infer_sort(t, constants_); }

void Theory::check_formula(const Formula& a) const {
  switch (a.kind()) {
    case Formula::Kind::Bot: return;
    case Formula::Kind::Imp:
    case Formula::Kind::And:
      check_formula(a.lhs());
      check_formula(a.rhs());
      return;
    case Formula::Kind::Forall: check_formula(a.body()); return;
    case Formula::Kind::Atom: break;
  }
  std::vector<Sort> sorts;
  for (const auto& t : a.args()) sorts.push_back(infer_sort(t, constants_));
  const std::string& p = a.pred();
  if (p == kNeq) {
    if (sorts.size() != 2 || sorts[0] != sorts[1])
      fail(ErrorCode::IllSorted, "inequality needs two individuals of one sort: " + to_string(a));
    if (!a.negative_atom()) fail(ErrorCode::Internal, "inequality marked positive");
    return;
  }
  if (p == kRel) {
    if (!relativized())
      fail(ErrorCode::UnknownIdentifier, "predicate r is only available in pawr/cawr");
    if (sorts.size() != 1 || !sorts[0].is_iota())
      fail(ErrorCode::IllSorted, "r applies to one individual of sort i: " + to_string(a));
    if (a.negative_atom()) fail(ErrorCode::Internal, "r marked negative");
    return;
  }
  auto it = predicates_.find(p);
  if (it == predicates_.end()) fail(ErrorCode::UnknownIdentifier, "unknown predicate " + p);
  if (it->second.args != sorts)
    fail(ErrorCode::IllSorted, "arguments of " + p + " have the wrong sorts: " + to_string(a));
  if (it->second.negative != a.negative_atom())
    fail(ErrorCode::Internal, "polarity of " + p + " disagrees with its declaration");
}

namespace {

Individual v(const std::string& n, const Sort& s) { return Individual::var(n, s); }
Individual c(const std::string& n, std::vector<Sort> inst = {}) {
  return Individual::constant(n, std::move(inst));
}
Individual ap(const Individual& f, std::initializer_list<Individual> args) {
  return Individual::apps(f, std::vector<Individual>(args));
}

void need_sorts(const AxiomInstance& in, size_t n) {
  if (in.sorts.size() != n)
    fail(ErrorCode::BadInstance, "axiom " + in.name + " expects " + std::to_string(n) +
                                     " sort parameters, got " + std::to_string(in.sorts.size()));
  if (in.formula || !in.binders.empty() || !in.params.empty())
    fail(ErrorCode::BadInstance, "axiom " + in.name + " takes no formula parameter");
}

std::set<std::string> names_of(const std::vector<SortedVar>& vs) {
  std::set<std::string> s;
  for (const auto& [n, _] : vs) s.insert(n);
  return s;
}

}  // namespace

Formula Theory::instantiate(const AxiomInstance& in) const {
  if (!has_axiom(in.name)) fail(ErrorCode::UnknownAxiom, "axiom " + in.name + " is not in theory " + name_);
  const Sort i = Sort::iota();
  const std::string& n = in.name;

  if (auto it = user_axioms_.find(n); it != user_axioms_.end()) {
    need_sorts(in, 0);
    return it->second;
  }
  if (n == "refl") {
    need_sorts(in, 1);
    const Sort& s = in.sorts[0];
    return Formula::forall("x", s, f_eq(v("x", s), v("x", s)));
  }
  if (n == "snz") {
    need_sorts(in, 0);
    return Formula::forall("x", i, f_not(f_eq(ap(c("S"), {v("x", i)}), c("0"))));
  }
  if (n == "def-k") {
    need_sorts(in, 2);
    const Sort &a = in.sorts[0], &b = in.sorts[1];
    Individual x = v("x", a), y = v("y", b);
    return f_forall_many({{"x", a}, {"y", b}}, f_eq(ap(c("k", {a, b}), {x, y}), x));
  }
  if (n == "def-s") {
    need_sorts(in, 3);
    const Sort &a = in.sorts[0], &b = in.sorts[1], &r = in.sorts[2];
    Sort sx = Sort::arrows({a, b}, r), sy = Sort::arrow(a, b);
    Individual x = v("x", sx), y = v("y", sy), z = v("z", a);
    return f_forall_many({{"x", sx}, {"y", sy}, {"z", a}},
                         f_eq(ap(c("s", {a, b, r}), {x, y, z}), ap(x, {z, ap(y, {z})})));
  }
  if (n == "def-recz" || n == "def-recs") {
    need_sorts(in, 1);
    const Sort& a = in.sorts[0];
    Sort sy = Sort::arrows({i, a}, a);
    Individual x = v("x", a), y = v("y", sy), rec = c("rec", {a});
    if (n == "def-recz")
      return f_forall_many({{"x", a}, {"y", sy}}, f_eq(ap(rec, {x, y, c("0")}), x));
    Individual z = v("z", i);
    return f_forall_many({{"x", a}, {"y", sy}, {"z", i}},
                         f_eq(ap(rec, {x, y, ap(c("S"), {z})}), ap(y, {z, ap(rec, {x, y, z})})));
  }
  if (n == "rel0") {
    need_sorts(in, 0);
    return Formula::rel(c("0"));
  }
  if (n == "rels") {
    need_sorts(in, 0);
    return rel_sort_pred(c("S"), Sort::arrow(i, i));
  }
  if (n == "rel-k" || n == "rel-s" || n == "rel-rec") {
    size_t k = n == "rel-k" ? 2 : n == "rel-s" ? 3 : 1;
    need_sorts(in, k);
    std::string cname = n.substr(4);
    Individual cst = c(cname, in.sorts);
    return rel_sort_pred(cst, constant_sort(cname, in.sorts));
  }

  // Schemes.
  if (!in.formula) fail(ErrorCode::BadInstance, "axiom " + n + " needs a formula parameter");
  if (!in.sorts.empty()) fail(ErrorCode::BadInstance, "axiom " + n + " takes no sort parameters");
  check_formula(in.formula);
  for (const auto& [pn, ps] : in.params)
    if (std::count_if(in.params.begin(), in.params.end(), [&](const SortedVar& q) { return q.first == pn; }) > 1)
      fail(ErrorCode::BadInstance, "parameter " + pn + " listed twice");
  std::set<std::string> bnames = names_of(in.binders);
  if (bnames.size() != in.binders.size()) fail(ErrorCode::BadInstance, "scheme binders must be distinct");
  for (const auto& [pn, _] : in.params)
    if (bnames.count(pn)) fail(ErrorCode::BadInstance, "parameter " + pn + " is also a binder");
  VarSet fv = free_vars(in.formula);
  for (const auto& [fn, fs] : fv) {
    auto match = [&](const SortedVar& q) { return q.first == fn; };
    auto b = std::find_if(in.binders.begin(), in.binders.end(), match);
    auto p = std::find_if(in.params.begin(), in.params.end(), match);
    const Sort* declared = b != in.binders.end() ? &b->second : p != in.params.end() ? &p->second : nullptr;
    if (!declared)
      fail(ErrorCode::BadInstance, "free variable " + fn + " of the " + n + " formula is neither a binder nor a parameter");
    if (*declared != fs) fail(ErrorCode::BadInstance, "variable " + fn + " has sort " + to_string(fs) +
                                                          " but is declared at " + to_string(*declared));
  }
  std::set<std::string> avoid = names_of(in.params);
  for (const auto& [fn, _] : fv) avoid.insert(fn);
  for (const auto& b : bnames) avoid.insert(b);
  std::set<std::string> all;
  all_var_names(in.formula, all);
  avoid.insert(all.begin(), all.end());
  const Formula& A = in.formula;

  if (n == "leib") {
    if (in.binders.size() != 1) fail(ErrorCode::BadInstance, "leib takes one binder");
    const auto& [x, s] = in.binders[0];
    std::string y = fresh_name(x, avoid);
    Formula body = Formula::forall(
        x, s,
        Formula::forall(y, s,
                        Formula::imp(f_not(A), Formula::imp(subst1(A, x, v(y, s)),
                                                            Formula::neq(v(x, s), v(y, s))))));
    return f_forall_many(in.params, body);
  }
  if (n == "ind") {
    if (in.binders.size() != 1 || !in.binders[0].second.is_iota())
      fail(ErrorCode::BadInstance, "ind takes one binder of sort i");
    const std::string& x = in.binders[0].first;
    Individual xv = v(x, i);
    Formula a0 = subst1(A, x, c("0"));
    Formula aS = subst1(A, x, ap(c("S"), {xv}));
    Formula step, concl;
    if (relativized()) {
      step = Formula::forall(x, i, Formula::imp(Formula::rel(xv), Formula::imp(A, aS)));
      concl = Formula::forall(x, i, Formula::imp(Formula::rel(xv), A));
    } else {
      step = Formula::forall(x, i, Formula::imp(A, aS));
      concl = Formula::forall(x, i, A);
    }
    return f_forall_many(in.params, Formula::imp(a0, Formula::imp(step, concl)));
  }
  if (n == "dc") {
    if (in.binders.size() != 3) fail(ErrorCode::BadInstance, "dc takes binders x y z");
    const auto& [x, sx] = in.binders[0];
    const auto& [y, sy] = in.binders[1];
    const auto& [z, sz] = in.binders[2];
    if (!sx.is_iota() || sy != sz) fail(ErrorCode::BadInstance, "dc binders must be x:i y:s z:s");
    const Sort& s = sy;
    Sort es = Sort::arrow(i, s);
    std::string e = fresh_name("e", avoid);
    Individual xv = v(x, i), yv = v(y, s), zv = v(z, s), ev = v(e, es);
    Individual ex = ap(ev, {xv}), eSx = ap(ev, {ap(c("S"), {xv})});
    if (!relativized()) {
      Formula hyp = Formula::forall(x, i, Formula::forall(y, s, f_exists(z, s, A)));
      Formula con = f_exists(e, es, Formula::forall(x, i, subst(A, {{y, ex}, {z, eSx}})));
      return f_forall_many(in.params, Formula::imp(hyp, con));
    }
    if (!A.is(Formula::Kind::And) || !alpha_eq(A.lhs(), rel_sort_pred(zv, s)))
      fail(ErrorCode::BadInstance, "dc formula must have the shape r(z) & C, got " + to_string(A));
    avoid.insert(e);
    std::string x2 = fresh_name(x, avoid);
    Formula inner = Formula::imp(Formula::forall(z, s, f_not(A)),
                                 Formula::forall(x2, i, subst(A, {{x, v(x2, i)}, {z, yv}})));
    Formula h1 = Formula::forall(
        x, i, Formula::imp(Formula::rel(xv), Formula::forall(y, s, Formula::imp(rel_sort_pred(yv, s), inner))));
    Formula h2 = Formula::forall(
        e, es, f_not(Formula::forall(x, i, Formula::imp(Formula::rel(xv), subst(A, {{y, ex}, {z, eSx}})))));
    return f_forall_many(in.params, Formula::imp(h1, Formula::imp(h2, Formula::bot())));
  }
  fail(ErrorCode::UnknownAxiom, "axiom " + n + " is not in theory " + name_);
}

}  // namespace kappa
