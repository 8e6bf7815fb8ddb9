#include "kappa/relativize.hpp"

#include <optional>

#include "kappa/error.hpp"
#include "kappa/syntax.hpp"

namespace kappa {

Formula rel_sort_pred(const Individual& t, const Sort& s) {
  if (s.is_base()) return Formula::rel(t);
  std::set<std::string> avoid;
  for (const auto& [n, _] : free_vars(t)) avoid.insert(n);
  std::string x = fresh_name("x", avoid);
  Individual xv = Individual::var(x, s.dom());
  return Formula::forall(x, s.dom(),
                         Formula::imp(rel_sort_pred(xv, s.dom()), rel_sort_pred(Individual::app(t, xv), s.cod())));
}

Formula rel_formula(const Formula& a) {
  switch (a.kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::Bot: return a;
    case Formula::Kind::Imp: return Formula::imp(rel_formula(a.lhs()), rel_formula(a.rhs()));
    case Formula::Kind::And: return Formula::conj(rel_formula(a.lhs()), rel_formula(a.rhs()));
    case Formula::Kind::Forall:
      return Formula::forall(
          a.var(), a.sort(),
          Formula::imp(rel_sort_pred(Individual::var(a.var(), a.sort()), a.sort()), rel_formula(a.body())));
  }
  return a;
}

Individual zero_of(const Sort& s) {
  if (s.is_base()) {
    if (!s.is_iota()) fail(ErrorCode::IllSorted, "no canonical element of base sort " + s.name());
    return Individual::constant("0");
  }
  return Individual::app(Individual::constant("k", {s.cod(), s.dom()}), zero_of(s.cod()));
}

namespace {

Proof constant_rel_proof(const Individual& t, const Theory& th) {
  const std::string& n = t.name();
  if (n == "0") return Proof::ax({"rel0", {}, {}, {}, {}});
  if (n == "S") return Proof::ax({"rels", {}, {}, {}, {}});
  if (n == "k" || n == "s" || n == "rec") return Proof::ax({"rel-" + n, t.inst(), {}, {}, {}});
  auto it = th.user_axioms().find("rel-" + n);
  if (it != th.user_axioms().end()) {
    Sort s = constant_sort(n, {}, th.constants());
    if (alpha_eq(it->second, rel_sort_pred(t, s))) return Proof::ax({"rel-" + n, {}, {}, {}, {}});
  }
  fail(ErrorCode::MissingRealizer, "no relativization lemma for constant " + n +
                                       " (declare an axiom rel-" + n + ")");
}

}  // namespace

Proof rel_individual_proof(const Individual& t, const RelEnv& env, const Theory& th) {
  switch (t.kind()) {
    case Individual::Kind::Var: {
      auto it = env.find(t.name());
      if (it == env.end()) fail(ErrorCode::Internal, "no relativization hypothesis for " + t.name());
      return Proof::id(it->second);
    }
    case Individual::Kind::Const: return constant_rel_proof(t, th);
    case Individual::Kind::App:
      return Proof::imp_elim(Proof::forall_elim(rel_individual_proof(t.fun(), env, th), t.arg()),
                             rel_individual_proof(t.arg(), env, th));
  }
  fail(ErrorCode::Internal, "bad individual");
}

Proof rel_individual_proof(const Individual& t, const Theory& th) {
  infer_sort(t, th.constants());
  VarSet fv = free_vars(t);
  NamePool pool;
  for (const auto& [n, _] : fv) pool.used.insert(n);
  RelEnv env;
  std::vector<std::pair<std::string, Sort>> order(fv.begin(), fv.end());
  for (const auto& [n, _] : order) env[n] = pool.fresh("r" + n);
  Proof p = rel_individual_proof(t, env, th);
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    p = Proof::forall_intro(
        it->first, it->second,
        Proof::imp_intro(env[it->first], rel_sort_pred(Individual::var(it->first, it->second), it->second), p));
  return p;
}

Proof relativize_prefix(const Proof& p, const Formula& from, const Formula& to, NamePool& pool) {
  if (alpha_eq(from, to)) return p;
  if (!from.is(Formula::Kind::Forall) || !to.is(Formula::Kind::Forall) || from.sort() != to.sort() ||
      !to.body().is(Formula::Kind::Imp))
    fail(ErrorCode::Internal, "cannot relativize " + to_string(from) + " into " + to_string(to));
  const Sort& s = from.sort();
  std::string u = pool.fresh(to.var());
  Individual uv = Individual::var(u, s);
  Formula guard = rel_sort_pred(uv, s);
  Formula to_body = subst1(to.body(), to.var(), uv);
  if (!alpha_eq(to_body.lhs(), guard))
    fail(ErrorCode::Internal, "expected a relativized quantifier in " + to_string(to));
  std::string h = pool.fresh("r" + u);
  Proof inner = relativize_prefix(Proof::forall_elim(p, uv), subst1(from.body(), from.var(), uv), to_body.rhs(), pool);
  return Proof::forall_intro(u, s, Proof::imp_intro(h, guard, inner));
}

Sequent rel_sequent(const Sequent& s) {
  Sequent r;
  for (const auto& [h, f] : s.gamma) r.gamma[h] = rel_formula(f);
  r.concl = rel_formula(s.concl);
  for (const auto& [l, f] : s.delta) r.delta[l] = rel_formula(f);
  return r;
}

namespace {

Individual var(const std::string& n, const Sort& s) { return Individual::var(n, s); }

// Strips a leading forall x1 ... xn by instantiating each with the variable of the same name.
Formula open_foralls(Formula f, size_t n) {
  for (size_t i = 0; i < n; ++i) {
    if (!f.is(Formula::Kind::Forall)) fail(ErrorCode::Internal, "expected a quantifier");
    f = f.body();
  }
  return f;
}

}  // namespace

Proof dc_relativized_proof(const AxiomInstance& inst, const Theory& source, NamePool& pool) {
  Theory target = source.relativize();
  const Formula& B = inst.formula;
  if (!is_negative(B)) fail(ErrorCode::Polarity, "dc needs a negative formula, got " + to_string(B));
  const auto& [x, si] = inst.binders[0];
  const auto& [y, s] = inst.binders[1];
  const std::string& z = inst.binders[2].first;
  Individual xv = var(x, si), yv = var(y, s), zv = var(z, s);
  Formula Br = rel_formula(B);
  Formula A = Formula::conj(rel_sort_pred(zv, s), Formula::conj(rel_sort_pred(yv, s), Br));
  for (const auto& n : {x, y, z}) pool.used.insert(n);
  for (const auto& [n, _] : inst.params) pool.used.insert(n);
  all_var_names(A, pool.used);

  AxiomInstance dc = inst;
  dc.formula = A;
  Formula dc_f = target.instantiate(dc);
  Formula T = rel_formula(source.instantiate(inst));

  // The axiom instantiated at its own parameter names: H1 -> H2 -> bot.
  Proof dc_p = Proof::ax(dc);
  for (const auto& [n, ps] : inst.params) dc_p = Proof::forall_elim(dc_p, var(n, ps));
  Formula dc_open = open_foralls(dc_f, inst.params.size());
  Formula H1 = dc_open.lhs(), H2 = dc_open.rhs().lhs();

  // Target, below the relativized parameters: Hyp -> (Inner -> bot).
  Formula t_open = T;
  for (size_t i = 0; i < inst.params.size(); ++i) t_open = t_open.body().rhs();
  Formula hyp = t_open.lhs(), inner = t_open.rhs().lhs();

  std::string h1 = pool.fresh("h1"), h2 = pool.fresh("h2"), h3 = pool.fresh("h3"), h4 = pool.fresh("h4");
  std::string hx = pool.fresh("hx"), hy = pool.fresh("hy"), hz = pool.fresh("hz"), hb = pool.fresh("hb");
  std::string alpha = pool.fresh("a");

  // P1 : H1 = forall x (r x -> forall y (r y -> (forall z ~A) -> forall x' A[x', y, y])).
  Formula h1_body = subst1(H1.body(), H1.var(), xv).rhs();
  Formula h1_y = subst1(h1_body.body(), h1_body.var(), yv).rhs();
  Formula all_not_A = h1_y.lhs();
  const Formula& concl_x2 = h1_y.rhs();
  std::string x2 = pool.fresh(concl_x2.var());
  Individual x2v = var(x2, si);
  Formula Br_x2yy = subst(Br, {{x, x2v}, {z, yv}});

  Proof q = Proof::forall_intro(
      z, s,
      Proof::imp_intro(hz, rel_sort_pred(zv, s),
                       Proof::imp_intro(hb, Br,
                                        Proof::imp_elim(Proof::forall_elim(Proof::id(h3), zv),
                                                        Proof::and_intro(Proof::id(hz),
                                                                         Proof::and_intro(Proof::id(hy), Proof::id(hb)))))));
  Proof h1_xy = Proof::imp_elim(
      Proof::forall_elim(Proof::imp_elim(Proof::forall_elim(Proof::id(h1), xv), Proof::id(hx)), yv), Proof::id(hy));
  Proof falsum1 = Proof::imp_elim(h1_xy, q);
  Proof body1 = Proof::and_intro(Proof::id(hy),
                                 Proof::and_intro(Proof::id(hy), Proof::bot_elim(alpha, Br_x2yy, falsum1)));
  Proof p1 = Proof::forall_intro(
      x, si,
      Proof::imp_intro(hx, Formula::rel(xv),
                       Proof::forall_intro(y, s,
                                           Proof::imp_intro(hy, rel_sort_pred(yv, s),
                                                            Proof::imp_intro(h3, all_not_A,
                                                                             Proof::forall_intro(x2, si, body1))))));

  // P2 : H2 = forall e ~forall x (r x -> A[x, e x, e (S x)]).
  std::string e = pool.fresh(H2.var());
  Sort es = H2.sort();
  Individual ev = var(e, es);
  Formula h4_f = subst1(H2.body(), H2.var(), ev).lhs();
  std::string xx = pool.fresh(x), hx2 = pool.fresh("hx"), hx3 = pool.fresh("hx");
  Individual xxv = var(xx, si);
  auto h4_at = [&](const std::string& h) {
    return Proof::imp_elim(Proof::forall_elim(Proof::id(h4), xxv), Proof::id(h));
  };
  Proof rel_e = Proof::forall_intro(
      xx, si, Proof::imp_intro(hx2, Formula::rel(xxv), Proof::and_elim(1, Proof::and_elim(2, h4_at(hx2)))));
  Proof q2 = Proof::forall_intro(
      xx, si, Proof::imp_intro(hx3, Formula::rel(xxv), Proof::and_elim(2, Proof::and_elim(2, h4_at(hx3)))));
  Proof p2 = Proof::forall_intro(
      e, es,
      Proof::imp_intro(h4, h4_f,
                       Proof::imp_elim(Proof::imp_elim(Proof::forall_elim(Proof::id(h2), ev), rel_e), q2)));

  Proof falsum = Proof::imp_elim(Proof::imp_elim(dc_p, p1), p2);
  Proof out = Proof::imp_intro(h1, hyp, Proof::imp_intro(h2, inner, falsum));
  for (auto it = inst.params.rbegin(); it != inst.params.rend(); ++it) {
    Individual dv = var(it->first, it->second);
    out = Proof::forall_intro(it->first, it->second,
                              Proof::imp_intro(pool.fresh("r" + it->first), rel_sort_pred(dv, it->second), out));
  }
  return out;
}

namespace {

class RelTranslator {
 public:
  RelTranslator(const Theory& src, NamePool& pool) : src_(src), dst_(src.relativize()), pool_(pool) {}

  struct Dummy {
    std::string var;
    Sort sort;
    std::string hyp;
  };
  std::vector<Dummy> dummies;

  Proof tr(const Proof& p, RelEnv& env) {
    using R = Proof::Rule;
    switch (p.rule()) {
      case R::Id: return p;
      case R::Ax: return axiom(p.axiom());
      case R::ImpIntro: return Proof::imp_intro(p.name(), rel_formula(p.formula()), tr(p.left(), env));
      case R::ImpElim: return Proof::imp_elim(tr(p.left(), env), tr(p.right(), env));
      case R::AndIntro: return Proof::and_intro(tr(p.left(), env), tr(p.right(), env));
      case R::AndElim: return Proof::and_elim(p.index(), tr(p.left(), env));
      case R::ForallIntro: {
        std::string h = pool_.fresh("r" + p.name());
        auto saved = env.find(p.name()) == env.end() ? std::optional<std::string>() : env[p.name()];
        env[p.name()] = h;
        Proof body = tr(p.left(), env);
        if (saved)
          env[p.name()] = *saved;
        else
          env.erase(p.name());
        Individual xv = Individual::var(p.name(), p.sort());
        return Proof::forall_intro(p.name(), p.sort(), Proof::imp_intro(h, rel_sort_pred(xv, p.sort()), body));
      }
      case R::ForallElim: {
        Proof head = tr(p.left(), env);
        for (const auto& [n, s] : free_vars(p.term()))
          if (!env.count(n)) {
            std::string h = pool_.fresh("r" + n);
            env[n] = h;
            dummies.push_back({n, s, h});
          }
        return Proof::imp_elim(Proof::forall_elim(head, p.term()), rel_individual_proof(p.term(), env, dst_));
      }
      case R::BotIntro: return Proof::bot_intro(p.name(), tr(p.left(), env));
      case R::BotElim: return Proof::bot_elim(p.name(), rel_formula(p.formula()), tr(p.left(), env));
    }
    fail(ErrorCode::Internal, "unknown rule");
  }

 private:
  const Theory& src_;
  Theory dst_;
  NamePool& pool_;

  Proof axiom(const AxiomInstance& in) {
    if (src_.user_axioms().count(in.name)) return Proof::ax(in);
    Formula target = rel_formula(src_.instantiate(in));
    if (in.name == "dc") return dc_relativized_proof(in, src_, pool_);
    AxiomInstance out = in;
    if (in.name == "leib" || in.name == "ind") out.formula = rel_formula(in.formula);
    return relativize_prefix(Proof::ax(out), dst_.instantiate(out), target, pool_);
  }
};

}  // namespace

Proof rel_proof(const Proof& p, const Theory& theory, const Sequent& goal) {
  if (theory.relativized()) fail(ErrorCode::Shape, "rel_proof expects a paw or caw proof");
  check_proof(p, theory, goal);
  auto closed = [](const Formula& f) { return free_vars(f).empty(); };
  if (!closed(goal.concl)) fail(ErrorCode::Shape, "conclusion is not closed: " + to_string(goal.concl));
  for (const auto& [_, f] : goal.gamma)
    if (!closed(f)) fail(ErrorCode::Shape, "hypothesis is not closed: " + to_string(f));
  for (const auto& [_, f] : goal.delta)
    if (!closed(f)) fail(ErrorCode::Shape, "label formula is not closed: " + to_string(f));

  NamePool pool;
  proof_names(p, pool.used);
  for (const auto& [h, f] : goal.gamma) {
    pool.used.insert(h);
    all_var_names(f, pool.used);
  }
  for (const auto& [l, f] : goal.delta) {
    pool.used.insert(l);
    all_var_names(f, pool.used);
  }
  all_var_names(goal.concl, pool.used);

  RelTranslator t(theory, pool);
  RelEnv env;
  Proof out = t.tr(p, env);
  Theory dst = theory.relativize();
  // Variables that were free in instantiations but never bound get discharged at 0^s.
  for (auto it = t.dummies.rbegin(); it != t.dummies.rend(); ++it) {
    Individual zv = Individual::var(it->var, it->sort);
    Individual zero = zero_of(it->sort);
    out = Proof::imp_elim(
        Proof::forall_elim(Proof::forall_intro(it->var, it->sort,
                                               Proof::imp_intro(it->hyp, rel_sort_pred(zv, it->sort), out)),
                           zero),
        rel_individual_proof(zero, RelEnv{}, dst));
  }
  return out;
}

}  // namespace kappa
