#include "kappa/proof.hpp"

#include "kappa/error.hpp"
#include "kappa/syntax.hpp"

namespace kappa {

namespace {

Proof::Node blank(Proof::Rule r) {
  Proof::Node n;
  n.rule = r;
  return n;
}

}  // namespace

#define KAPPA_MAKE(node) \
  Proof out;             \
  out.node_ = std::make_shared<Node>(std::move(node)); \
  return out

Proof Proof::id(const std::string& hyp) {
  Node n = blank(Rule::Id);
  n.name = hyp;
  KAPPA_MAKE(n);
}

Proof Proof::ax(AxiomInstance inst) {
  Node n = blank(Rule::Ax);
  n.axiom = std::move(inst);
  KAPPA_MAKE(n);
}

Proof Proof::imp_intro(const std::string& hyp, const Formula& a, const Proof& p) {
  Node n = blank(Rule::ImpIntro);
  n.name = hyp;
  n.formula = a;
  n.a = p;
  KAPPA_MAKE(n);
}

Proof Proof::imp_elim(const Proof& p, const Proof& q) {
  Node n = blank(Rule::ImpElim);
  n.a = p;
  n.b = q;
  KAPPA_MAKE(n);
}

Proof Proof::and_intro(const Proof& p, const Proof& q) {
  Node n = blank(Rule::AndIntro);
  n.a = p;
  n.b = q;
  KAPPA_MAKE(n);
}

Proof Proof::and_elim(int i, const Proof& p) {
  Node n = blank(Rule::AndElim);
  n.index = i;
  n.a = p;
  KAPPA_MAKE(n);
}

Proof Proof::forall_intro(const std::string& var, const Sort& sort, const Proof& p) {
  Node n = blank(Rule::ForallIntro);
  n.name = var;
  n.sort = sort;
  n.a = p;
  KAPPA_MAKE(n);
}

Proof Proof::forall_elim(const Proof& p, const Individual& t) {
  Node n = blank(Rule::ForallElim);
  n.a = p;
  n.term = t;
  KAPPA_MAKE(n);
}

Proof Proof::bot_intro(const std::string& label, const Proof& p) {
  Node n = blank(Rule::BotIntro);
  n.name = label;
  n.a = p;
  KAPPA_MAKE(n);
}

Proof Proof::bot_elim(const std::string& label, const Formula& a, const Proof& p) {
  Node n = blank(Rule::BotElim);
  n.name = label;
  n.formula = a;
  n.a = p;
  KAPPA_MAKE(n);
}

#undef KAPPA_MAKE

Proof::Rule Proof::rule() const { return node_->rule; }
const std::string& Proof::name() const { return node_->name; }
const Formula& Proof::formula() const { return node_->formula; }
const Sort& Proof::sort() const { return node_->sort; }
const Individual& Proof::term() const { return node_->term; }
int Proof::index() const { return node_->index; }
const AxiomInstance& Proof::axiom() const { return node_->axiom; }
const Proof& Proof::left() const { return node_->a; }
const Proof& Proof::right() const { return node_->b; }

size_t Proof::size() const {
  size_t s = 1;
  if (node_->a) s += node_->a.size();
  if (node_->b) s += node_->b.size();
  return s;
}

bool operator==(const Proof& a, const Proof& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  const auto &x = *a.node_, &y = *b.node_;
  if (x.rule != y.rule || x.name != y.name || x.index != y.index) return false;
  if (static_cast<bool>(x.formula) != static_cast<bool>(y.formula)) return false;
  if (x.formula && !(x.formula == y.formula)) return false;
  if (static_cast<bool>(x.sort) != static_cast<bool>(y.sort)) return false;
  if (x.sort && x.sort != y.sort) return false;
  if (static_cast<bool>(x.term) != static_cast<bool>(y.term)) return false;
  if (x.term && x.term != y.term) return false;
  if (!(x.axiom == y.axiom)) return false;
  return x.a == y.a && x.b == y.b;
}

const char* rule_name(Proof::Rule r) {
  switch (r) {
    case Proof::Rule::Id: return "id";
    case Proof::Rule::Ax: return "ax";
    case Proof::Rule::ImpIntro: return "imp-intro";
    case Proof::Rule::ImpElim: return "imp-elim";
    case Proof::Rule::AndIntro: return "and-intro";
    case Proof::Rule::AndElim: return "and-elim";
    case Proof::Rule::ForallIntro: return "forall-intro";
    case Proof::Rule::ForallElim: return "forall-elim";
    case Proof::Rule::BotIntro: return "bot-intro";
    case Proof::Rule::BotElim: return "bot-elim";
  }
  return "?";
}

bool sequent_alpha_eq(const Sequent& a, const Sequent& b) {
  auto ctx_eq = [](const Context& x, const Context& y) {
    if (x.size() != y.size()) return false;
    for (auto i = x.begin(), j = y.begin(); i != x.end(); ++i, ++j)
      if (i->first != j->first || !alpha_eq(i->second, j->second)) return false;
    return true;
  };
  return ctx_eq(a.gamma, b.gamma) && ctx_eq(a.delta, b.delta) && alpha_eq(a.concl, b.concl);
}

namespace {

struct Used {
  std::set<std::string> hyps, labels;
};

class Checker {
 public:
  explicit Checker(const Theory& th) : th_(th) {}

  Formula run(const Proof& p, Context& gamma, Context& delta, Used& used) {
    path_.push_back(rule_name(p.rule()));
    Formula r = step(p, gamma, delta, used);
    path_.pop_back();
    return r;
  }

 private:
  const Theory& th_;
  std::vector<const char*> path_;

  [[noreturn]] void bad(ErrorCode c, const std::string& msg) const {
    std::string where;
    for (size_t i = 0; i < path_.size(); ++i) where += (i ? " > " : "") + std::string(path_[i]);
    fail(c, "at " + where + ": " + msg);
  }

  void well_formed(const Formula& a) {
    try {
      th_.check_formula(a);
    } catch (const Error& e) {
      bad(e.code(), e.what());
    }
  }

  Formula step(const Proof& p, Context& gamma, Context& delta, Used& used) {
    using R = Proof::Rule;
    switch (p.rule()) {
      case R::Id: {
        auto it = gamma.find(p.name());
        if (it == gamma.end()) bad(ErrorCode::UnknownIdentifier, "unknown hypothesis " + p.name());
        used.hyps.insert(p.name());
        return it->second;
      }
      case R::Ax: {
        try {
          return th_.instantiate(p.axiom());
        } catch (const Error& e) {
          bad(e.code(), e.what());
        }
      }
      case R::ImpIntro: {
        well_formed(p.formula());
        if (gamma.count(p.name())) bad(ErrorCode::RuleMismatch, "hypothesis name " + p.name() + " reused");
        gamma.emplace(p.name(), p.formula());
        Formula b = run(p.left(), gamma, delta, used);
        gamma.erase(p.name());
        used.hyps.erase(p.name());
        return Formula::imp(p.formula(), b);
      }
      case R::ImpElim: {
        Formula f = run(p.left(), gamma, delta, used);
        Formula a = run(p.right(), gamma, delta, used);
        if (!f.is(Formula::Kind::Imp)) bad(ErrorCode::RuleMismatch, "not an implication: " + to_string(f));
        if (!alpha_eq(f.lhs(), a))
          bad(ErrorCode::RuleMismatch, "argument proves " + to_string(a) + " but " + to_string(f.lhs()) + " is needed");
        return f.rhs();
      }
      case R::AndIntro: {
        Formula a = run(p.left(), gamma, delta, used);
        Formula b = run(p.right(), gamma, delta, used);
        return Formula::conj(a, b);
      }
      case R::AndElim: {
        Formula f = run(p.left(), gamma, delta, used);
        if (!f.is(Formula::Kind::And)) bad(ErrorCode::RuleMismatch, "not a conjunction: " + to_string(f));
        if (p.index() == 1) return f.lhs();
        if (p.index() == 2) return f.rhs();
        bad(ErrorCode::RuleMismatch, "projection index must be 1 or 2");
      }
      case R::ForallIntro: {
        Used inner;
        Formula b = run(p.left(), gamma, delta, inner);
        for (const auto& h : inner.hyps)
          if (occurs_free(p.name(), gamma.at(h)))
            bad(ErrorCode::Eigenvariable, "eigenvariable " + p.name() + " is free in hypothesis " + h);
        for (const auto& l : inner.labels)
          if (occurs_free(p.name(), delta.at(l)))
            bad(ErrorCode::Eigenvariable, "eigenvariable " + p.name() + " is free in label " + l);
        used.hyps.insert(inner.hyps.begin(), inner.hyps.end());
        used.labels.insert(inner.labels.begin(), inner.labels.end());
        return Formula::forall(p.name(), p.sort(), b);
      }
      case R::ForallElim: {
        Formula f = run(p.left(), gamma, delta, used);
        if (!f.is(Formula::Kind::Forall)) bad(ErrorCode::RuleMismatch, "not a universal: " + to_string(f));
        Sort s;
        try {
          s = infer_sort(p.term(), th_.constants());
        } catch (const Error& e) {
          bad(e.code(), e.what());
        }
        if (s != f.sort())
          bad(ErrorCode::IllSorted, "instantiating " + f.var() + ":" + to_string(f.sort()) + " with " +
                                        to_string(p.term()) + " of sort " + to_string(s));
        return subst1(f.body(), f.var(), p.term());
      }
      case R::BotIntro: {
        Formula a = run(p.left(), gamma, delta, used);
        auto it = delta.find(p.name());
        if (it == delta.end()) bad(ErrorCode::UnknownIdentifier, "unknown label " + p.name());
        if (!alpha_eq(it->second, a))
          bad(ErrorCode::RuleMismatch, "label " + p.name() + " has " + to_string(it->second) +
                                           " but the premise proves " + to_string(a));
        used.labels.insert(p.name());
        return Formula::bot();
      }
      case R::BotElim: {
        well_formed(p.formula());
        if (!is_negative(p.formula()))
          bad(ErrorCode::Polarity, "cannot place the positive formula " + to_string(p.formula()) +
                                       " in the right context");
        if (delta.count(p.name())) bad(ErrorCode::RuleMismatch, "label " + p.name() + " reused");
        delta.emplace(p.name(), p.formula());
        Formula b = run(p.left(), gamma, delta, used);
        delta.erase(p.name());
        used.labels.erase(p.name());
        if (!b.is(Formula::Kind::Bot)) bad(ErrorCode::RuleMismatch, "premise proves " + to_string(b) + ", not bot");
        return p.formula();
      }
    }
    bad(ErrorCode::Internal, "unknown rule");
  }
};

void check_contexts(const Theory& th, const Context& gamma, const Context& delta) {
  for (const auto& [_, f] : gamma) th.check_formula(f);
  for (const auto& [l, f] : delta) {
    th.check_formula(f);
    if (!is_negative(f))
      fail(ErrorCode::Polarity, "label " + l + " carries the positive formula " + to_string(f));
  }
  for (const auto& [h, _] : gamma)
    if (delta.count(h)) fail(ErrorCode::RuleMismatch, "name " + h + " used as both hypothesis and label");
}

}  // namespace

Formula infer_conclusion(const Proof& p, const Theory& th, const Context& gamma, const Context& delta) {
  check_contexts(th, gamma, delta);
  Context g = gamma, d = delta;
  Used used;
  return Checker(th).run(p, g, d, used);
}

Sequent check_proof(const Proof& p, const Theory& th, const Sequent& goal) {
  th.check_formula(goal.concl);
  Formula c = infer_conclusion(p, th, goal.gamma, goal.delta);
  if (!alpha_eq(c, goal.concl))
    fail(ErrorCode::RuleMismatch, "proof concludes " + to_string(c) + " but the goal is " + to_string(goal.concl));
  return Sequent{goal.gamma, c, goal.delta};
}

void proof_names(const Proof& p, std::set<std::string>& out) {
  switch (p.rule()) {
    case Proof::Rule::Id:
    case Proof::Rule::ImpIntro:
    case Proof::Rule::ForallIntro:
    case Proof::Rule::BotIntro:
    case Proof::Rule::BotElim: out.insert(p.name()); break;
    default: break;
  }
  if (p.rule() == Proof::Rule::ImpIntro || p.rule() == Proof::Rule::BotElim) all_var_names(p.formula(), out);
  if (p.rule() == Proof::Rule::ForallElim) {
    for (const auto& [n, _] : free_vars(p.term())) out.insert(n);
  }
  if (p.left()) proof_names(p.left(), out);
  if (p.right()) proof_names(p.right(), out);
}

}  // namespace kappa
