#include "kappa/cps.hpp"

#include <vector>

#include "kappa/error.hpp"
#include "kappa/logic.hpp"
#include "kappa/syntax.hpp"

namespace kappa {

// ---- types ----

LamType LamType::base() {
  static const LamType t = [] {
    LamType r;
    r.node_ = std::make_shared<Node>(Node{Kind::Base, {}, {}});
    return r;
  }();
  return t;
}

LamType LamType::answer() {
  static const LamType t = [] {
    LamType r;
    r.node_ = std::make_shared<Node>(Node{Kind::R, {}, {}});
    return r;
  }();
  return t;
}

LamType LamType::unit() {
  static const LamType t = [] {
    LamType r;
    r.node_ = std::make_shared<Node>(Node{Kind::Unit, {}, {}});
    return r;
  }();
  return t;
}

LamType LamType::arrow(const LamType& a) {
  LamType r;
  r.node_ = std::make_shared<Node>(Node{Kind::Arrow, a, answer()});
  return r;
}

LamType LamType::prod(const LamType& a, const LamType& b) {
  LamType r;
  r.node_ = std::make_shared<Node>(Node{Kind::Prod, a, b});
  return r;
}

LamType LamType::sum(const LamType& a, const LamType& b) {
  LamType r;
  r.node_ = std::make_shared<Node>(Node{Kind::Sum, a, b});
  return r;
}

LamType::Kind LamType::kind() const { return node_->kind; }
const LamType& LamType::left() const { return node_->a; }
const LamType& LamType::right() const { return node_->b; }

bool operator==(const LamType& a, const LamType& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_ || a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case LamType::Kind::Base:
    case LamType::Kind::R:
    case LamType::Kind::Unit: return true;
    case LamType::Kind::Arrow: return a.left() == b.left();
    default: return a.left() == b.left() && a.right() == b.right();
  }
}

// ---- terms ----

namespace {

LamTerm::Node lnode(LamTerm::Kind k) {
  LamTerm::Node n;
  n.kind = k;
  return n;
}

}  // namespace

#define KAPPA_LAM(n)                                \
  LamTerm out;                                      \
  out.node_ = std::make_shared<Node>(std::move(n)); \
  return out

LamTerm LamTerm::var(const std::string& x) {
  Node n = lnode(Kind::Var);
  n.name = x;
  KAPPA_LAM(n);
}

LamTerm LamTerm::constant(const std::string& c, const LamType& t) {
  Node n = lnode(Kind::Const);
  n.name = c;
  n.type = t;
  KAPPA_LAM(n);
}

LamTerm LamTerm::lam(const std::string& x, const LamType& a, const LamTerm& body) {
  Node n = lnode(Kind::Lam);
  n.name = x;
  n.type = a;
  n.a = body;
  KAPPA_LAM(n);
}

LamTerm LamTerm::app(const LamTerm& f, const LamTerm& a) {
  Node n = lnode(Kind::App);
  n.a = f;
  n.b = a;
  KAPPA_LAM(n);
}

LamTerm LamTerm::pair(const LamTerm& a, const LamTerm& b) {
  Node n = lnode(Kind::Pair);
  n.a = a;
  n.b = b;
  KAPPA_LAM(n);
}

LamTerm LamTerm::proj(int i, const LamTerm& t) {
  Node n = lnode(Kind::Proj);
  n.index = i;
  n.a = t;
  KAPPA_LAM(n);
}

LamTerm LamTerm::star() {
  static const LamTerm t = [] {
    Node n = lnode(Kind::Star);
    KAPPA_LAM(n);
  }();
  return t;
}

LamTerm LamTerm::in(int i, const LamType& sum, const LamTerm& t) {
  Node n = lnode(Kind::In);
  n.index = i;
  n.type = sum;
  n.a = t;
  KAPPA_LAM(n);
}

LamTerm LamTerm::cases(const LamTerm& t, const std::string& y, const LamTerm& b1, const std::string& z,
                       const LamTerm& b2) {
  Node n = lnode(Kind::Case);
  n.name = y;
  n.name2 = z;
  n.a = t;
  n.b = b1;
  n.c = b2;
  KAPPA_LAM(n);
}

#undef KAPPA_LAM

LamTerm::Kind LamTerm::kind() const { return node_->kind; }
const std::string& LamTerm::name() const { return node_->name; }
const std::string& LamTerm::name2() const { return node_->name2; }
const LamType& LamTerm::type() const { return node_->type; }
int LamTerm::index() const { return node_->index; }
const LamTerm& LamTerm::a() const { return node_->a; }
const LamTerm& LamTerm::b() const { return node_->b; }
const LamTerm& LamTerm::c() const { return node_->c; }

size_t LamTerm::size() const {
  size_t s = 1;
  for (const LamTerm* k : {&node_->a, &node_->b, &node_->c})
    if (*k) s += k->size();
  return s;
}

// ---- translation ----

LamType cps_type(const LmType& a) {
  using K = LmType::Kind;
  switch (a.kind()) {
    case K::Nat: return LamType::base();
    case K::Bot: return LamType::unit();
    case K::Arrow: return LamType::prod(LamType::arrow(cps_type(a.left())), cps_type(a.right()));
    case K::Prod: return LamType::sum(cps_type(a.left()), cps_type(a.right()));
  }
  fail(ErrorCode::Internal, "bad type");
}

std::string cps_var(const std::string& x) { return "x_" + x; }
std::string cps_label(const std::string& alpha) { return "a_" + alpha; }

namespace {

class Cps {
 public:
  Cps(const LmCtx& l, const LmCtx& m) : l_(l), m_(m) {}

  std::pair<LamTerm, LmType> go(const LmTerm& t) {
    using K = LmTerm::Kind;
    using L = LamTerm;
    switch (t.kind()) {
      case K::Var: {
        auto it = l_.find(t.name());
        if (it == l_.end()) fail(ErrorCode::IllTyped, "unbound variable " + t.name());
        return {L::var(cps_var(t.name())), it->second};
      }
      case K::Num:
      case K::Succ:
      case K::Pred:
      case K::Ifz:
      case K::Fix: {
        LmType a = typecheck(t);
        return {L::constant(to_string(t), LamType::arrow(cps_type(a))), a};
      }
      case K::Lam: {
        auto saved = bind(l_, t.name(), t.type());
        auto [body, b] = go(t.left());
        restore(l_, t.name(), saved);
        LmType ty = LmType::arrow(t.type(), b);
        std::string v = fresh();
        LamType xt = LamType::arrow(cps_type(t.type()));
        L inner = L::lam(cps_var(t.name()), xt, L::app(body, L::proj(2, L::var(v))));
        return {L::lam(v, cps_type(ty), L::app(inner, L::proj(1, L::var(v)))), ty};
      }
      case K::App: {
        auto [f, ft] = go(t.left());
        auto [a, at] = go(t.right());
        if (!ft.is(LmType::Kind::Arrow) || ft.left() != at) fail(ErrorCode::IllTyped, "ill-typed application");
        std::string v = fresh();
        return {L::lam(v, cps_type(ft.right()), L::app(f, L::pair(a, L::var(v)))), ft.right()};
      }
      case K::Pair: {
        auto [m, mt] = go(t.left());
        auto [n, nt] = go(t.right());
        LmType ty = LmType::prod(mt, nt);
        std::string v = fresh(), w1 = fresh(), w2 = fresh();
        L body = L::cases(L::var(v), w1, L::app(m, L::var(w1)), w2, L::app(n, L::var(w2)));
        return {L::lam(v, cps_type(ty), body), ty};
      }
      case K::Proj: {
        auto [m, mt] = go(t.left());
        if (!mt.is(LmType::Kind::Prod)) fail(ErrorCode::IllTyped, "projection of a non-product");
        LmType ai = t.index() == 1 ? mt.left() : mt.right();
        std::string v = fresh();
        return {L::lam(v, cps_type(ai), L::app(m, L::in(t.index(), cps_type(mt), L::var(v)))), ai};
      }
      case K::Mu: {
        auto saved = bind(m_, t.name(), t.type());
        auto [body, b] = go(t.left());
        restore(m_, t.name(), saved);
        return {L::lam(cps_label(t.name()), cps_type(t.type()), L::app(body, L::star())), t.type()};
      }
      case K::Named: {
        if (!m_.count(t.name())) fail(ErrorCode::IllTyped, "unbound label " + t.name());
        auto [body, b] = go(t.left());
        std::string v = fresh();
        return {L::lam(v, LamType::unit(), L::app(body, L::var(cps_label(t.name())))), LmType::bot()};
      }
    }
    fail(ErrorCode::Internal, "bad term");
  }

 private:
  LmCtx l_, m_;
  int counter_ = 0;

  std::string fresh() { return "v" + std::to_string(counter_++); }

  static std::optional<LmType> bind(LmCtx& c, const std::string& x, const LmType& a) {
    std::optional<LmType> saved;
    if (auto it = c.find(x); it != c.end()) saved = it->second;
    c[x] = a;
    return saved;
  }
  static void restore(LmCtx& c, const std::string& x, const std::optional<LmType>& saved) {
    if (saved)
      c[x] = *saved;
    else
      c.erase(x);
  }
};

}  // namespace

LamTerm cps_term(const LmTerm& m, const LmCtx& lctx, const LmCtx& mctx) {
  typecheck(m, lctx, mctx);
  return Cps(lctx, mctx).go(m).first;
}

LamCtx cps_ctx(const LmCtx& lctx, const LmCtx& mctx) {
  LamCtx out;
  for (const auto& [x, a] : lctx) out[cps_var(x)] = LamType::arrow(cps_type(a));
  for (const auto& [x, a] : mctx) out[cps_label(x)] = cps_type(a);
  return out;
}

// ---- typing ----

namespace {

[[noreturn]] void lam_ill(const std::string& msg, const LamTerm& t) {
  fail(ErrorCode::IllTyped, msg + ": " + to_string(t));
}

LamType lam_type(const LamTerm& t, LamCtx& ctx) {
  using K = LamTerm::Kind;
  auto scoped = [&](const std::string& x, const LamType& a, const LamTerm& body) {
    std::optional<LamType> saved;
    if (auto it = ctx.find(x); it != ctx.end()) saved = it->second;
    ctx[x] = a;
    LamType r = lam_type(body, ctx);
    if (saved)
      ctx[x] = *saved;
    else
      ctx.erase(x);
    return r;
  };
  switch (t.kind()) {
    case K::Var: {
      auto it = ctx.find(t.name());
      if (it == ctx.end()) lam_ill("unbound variable", t);
      return it->second;
    }
    case K::Const: return t.type();
    case K::Lam: {
      LamType b = scoped(t.name(), t.type(), t.a());
      if (!b.is(LamType::Kind::R)) lam_ill("lambda body must have type R", t);
      return LamType::arrow(t.type());
    }
    case K::App: {
      LamType f = lam_type(t.a(), ctx);
      LamType a = lam_type(t.b(), ctx);
      if (!f.is(LamType::Kind::Arrow) || f.left() != a) lam_ill("ill-typed application", t);
      return LamType::answer();
    }
    case K::Pair: return LamType::prod(lam_type(t.a(), ctx), lam_type(t.b(), ctx));
    case K::Proj: {
      LamType p = lam_type(t.a(), ctx);
      if (!p.is(LamType::Kind::Prod)) lam_ill("projection of a non-product", t);
      return t.index() == 1 ? p.left() : p.right();
    }
    case K::Star: return LamType::unit();
    case K::In: {
      const LamType& s = t.type();
      if (!s.is(LamType::Kind::Sum)) lam_ill("injection into a non-sum", t);
      LamType a = lam_type(t.a(), ctx);
      if (a != (t.index() == 1 ? s.left() : s.right())) lam_ill("injected term has the wrong type", t);
      return s;
    }
    case K::Case: {
      LamType s = lam_type(t.a(), ctx);
      if (!s.is(LamType::Kind::Sum)) lam_ill("case on a non-sum", t);
      LamType b1 = scoped(t.name(), s.left(), t.b());
      LamType b2 = scoped(t.name2(), s.right(), t.c());
      if (b1 != b2) lam_ill("case branches disagree", t);
      return b1;
    }
  }
  fail(ErrorCode::Internal, "bad term");
}

}  // namespace

LamType typecheck_lam(const LamTerm& t, const LamCtx& ctx) {
  LamCtx c = ctx;
  return lam_type(t, c);
}

// ---- variables ----

namespace {

void fv(const LamTerm& t, std::set<std::string>& bound, std::set<std::string>& out) {
  using K = LamTerm::Kind;
  auto under = [&](const std::string& x, const LamTerm& body) {
    bool fresh = bound.insert(x).second;
    fv(body, bound, out);
    if (fresh) bound.erase(x);
  };
  switch (t.kind()) {
    case K::Var:
      if (!bound.count(t.name())) out.insert(t.name());
      return;
    case K::Const:
    case K::Star: return;
    case K::Lam: under(t.name(), t.a()); return;
    case K::Case:
      fv(t.a(), bound, out);
      under(t.name(), t.b());
      under(t.name2(), t.c());
      return;
    default:
      if (t.a()) fv(t.a(), bound, out);
      if (t.b()) fv(t.b(), bound, out);
  }
}

void all_names(const LamTerm& t, std::set<std::string>& out) {
  if (t.is(LamTerm::Kind::Var) || t.is(LamTerm::Kind::Lam)) out.insert(t.name());
  if (t.is(LamTerm::Kind::Case)) {
    out.insert(t.name());
    out.insert(t.name2());
  }
  for (const LamTerm* k : {&t.a(), &t.b(), &t.c()})
    if (*k) all_names(*k, out);
}

int depth_in(const std::vector<std::string>& b, const std::string& x) {
  for (int i = static_cast<int>(b.size()) - 1; i >= 0; --i)
    if (b[i] == x) return static_cast<int>(b.size()) - 1 - i;
  return -1;
}

struct LamAlpha {
  std::vector<std::string> ba, bb;

  bool under(const std::string& x, const LamTerm& s, const std::string& y, const LamTerm& t) {
    ba.push_back(x);
    bb.push_back(y);
    bool r = go(s, t);
    ba.pop_back();
    bb.pop_back();
    return r;
  }

  bool go(const LamTerm& s, const LamTerm& t) {
    using K = LamTerm::Kind;
    if (s.kind() != t.kind()) return false;
    switch (s.kind()) {
      case K::Var: {
        int i = depth_in(ba, s.name()), j = depth_in(bb, t.name());
        return i == j && (i >= 0 || s.name() == t.name());
      }
      case K::Const: return s.name() == t.name() && s.type() == t.type();
      case K::Star: return true;
      case K::Lam: return s.type() == t.type() && under(s.name(), s.a(), t.name(), t.a());
      case K::App:
      case K::Pair: return go(s.a(), t.a()) && go(s.b(), t.b());
      case K::Proj: return s.index() == t.index() && go(s.a(), t.a());
      case K::In: return s.index() == t.index() && s.type() == t.type() && go(s.a(), t.a());
      case K::Case:
        return go(s.a(), t.a()) && under(s.name(), s.b(), t.name(), t.b()) &&
               under(s.name2(), s.c(), t.name2(), t.c());
    }
    return false;
  }
};

}  // namespace

std::set<std::string> free_vars(const LamTerm& t) {
  std::set<std::string> bound, out;
  fv(t, bound, out);
  return out;
}

bool alpha_eq(const LamTerm& a, const LamTerm& b) {
  if (a.same_node(b)) return true;
  LamAlpha al;
  return al.go(a, b);
}

namespace {

struct LamSubst {
  std::string x;
  LamTerm n;
  std::set<std::string> fvn;

  // Binder `y` over `body`: returns the (possibly renamed) binder and the substituted body.
  std::pair<std::string, LamTerm> under(const std::string& y, const LamTerm& body) {
    if (y == x) return {y, body};
    if (fvn.count(y)) {
      std::set<std::string> avoid = fvn;
      std::set<std::string> fb = free_vars(body);
      if (!fb.count(x)) return {y, body};
      avoid.insert(fb.begin(), fb.end());
      avoid.insert(x);
      std::string y2 = fresh_name(y, avoid);
      return {y2, go(subst(body, y, LamTerm::var(y2)))};
    }
    return {y, go(body)};
  }

  LamTerm go(const LamTerm& t) {
    using K = LamTerm::Kind;
    using L = LamTerm;
    switch (t.kind()) {
      case K::Var: return t.name() == x ? n : t;
      case K::Const:
      case K::Star: return t;
      case K::Lam: {
        auto [y, b] = under(t.name(), t.a());
        if (y == t.name() && b.same_node(t.a())) return t;
        return L::lam(y, t.type(), b);
      }
      case K::App: {
        L f = go(t.a()), a = go(t.b());
        if (f.same_node(t.a()) && a.same_node(t.b())) return t;
        return L::app(f, a);
      }
      case K::Pair: {
        L f = go(t.a()), a = go(t.b());
        if (f.same_node(t.a()) && a.same_node(t.b())) return t;
        return L::pair(f, a);
      }
      case K::Proj: {
        L a = go(t.a());
        return a.same_node(t.a()) ? t : L::proj(t.index(), a);
      }
      case K::In: {
        L a = go(t.a());
        return a.same_node(t.a()) ? t : L::in(t.index(), t.type(), a);
      }
      case K::Case: {
        L s = go(t.a());
        auto [y, b1] = under(t.name(), t.b());
        auto [z, b2] = under(t.name2(), t.c());
        return L::cases(s, y, b1, z, b2);
      }
    }
    return t;
  }
};

}  // namespace

LamTerm subst(const LamTerm& t, const std::string& x, const LamTerm& n) {
  LamSubst s{x, n, free_vars(n)};
  return s.go(t);
}

// ---- normalization ----

namespace {

using L = LamTerm;
using LK = LamTerm::Kind;

class Normalizer {
 public:
  explicit Normalizer(std::set<std::string> used) { pool_.used = std::move(used); }

  // beta for arrows, products and sums, with elimination and case-of-case
  // pushed into case branches.
  L beta(const L& t) {
    switch (t.kind()) {
      case LK::Var:
      case LK::Const:
      case LK::Star: return t;
      case LK::Lam: return L::lam(t.name(), t.type(), beta(t.a()));
      case LK::Pair: return L::pair(beta(t.a()), beta(t.b()));
      case LK::In: return L::in(t.index(), t.type(), beta(t.a()));
      case LK::App: {
        L f = beta(t.a());
        L a = beta(t.b());
        if (f.is(LK::Lam)) return beta(subst(f.a(), f.name(), a));
        if (f.is(LK::Case)) {
          auto [y, b1, z, b2] = open_case(f, free_vars(a));
          return beta(L::cases(f.a(), y, L::app(b1, a), z, L::app(b2, a)));
        }
        return L::app(f, a);
      }
      case LK::Proj: {
        L p = beta(t.a());
        if (p.is(LK::Pair)) return t.index() == 1 ? p.a() : p.b();
        if (p.is(LK::Case))
          return beta(L::cases(p.a(), p.name(), L::proj(t.index(), p.b()), p.name2(), L::proj(t.index(), p.c())));
        return L::proj(t.index(), p);
      }
      case LK::Case: {
        L s = beta(t.a());
        if (s.is(LK::In)) return beta(subst(s.index() == 1 ? t.b() : t.c(), s.index() == 1 ? t.name() : t.name2(), s.a()));
        if (s.is(LK::Case)) {
          std::set<std::string> outer = free_vars(L::lam(t.name(), LamType::unit(), t.b()));
          std::set<std::string> o2 = free_vars(L::lam(t.name2(), LamType::unit(), t.c()));
          outer.insert(o2.begin(), o2.end());
          auto [y, b1, z, b2] = open_case(s, outer);
          L c1 = L::cases(b1, t.name(), t.b(), t.name2(), t.c());
          L c2 = L::cases(b2, t.name(), t.b(), t.name2(), t.c());
          return beta(L::cases(s.a(), y, c1, z, c2));
        }
        return L::cases(s, t.name(), beta(t.b()), t.name2(), beta(t.c()));
      }
    }
    return t;
  }

  // eta-long form of a beta-normal term at type `a`.
  L expand(const L& t, const LamType& a, LamCtx& ctx) {
    switch (a.kind()) {
      case LamType::Kind::Unit: return L::star();
      case LamType::Kind::Arrow: {
        if (t.is(LK::Lam)) {
          auto saved = bind(ctx, t.name(), t.type());
          L body = expand(t.a(), LamType::answer(), ctx);
          restore(ctx, t.name(), saved);
          return L::lam(t.name(), t.type(), body);
        }
        std::string u = pool_.fresh("u");
        auto saved = bind(ctx, u, a.left());
        L body = expand(beta(L::app(t, L::var(u))), LamType::answer(), ctx);
        restore(ctx, u, saved);
        return L::lam(u, a.left(), body);
      }
      case LamType::Kind::Prod: {
        if (t.is(LK::Pair)) return L::pair(expand(t.a(), a.left(), ctx), expand(t.b(), a.right(), ctx));
        return L::pair(expand(beta(L::proj(1, t)), a.left(), ctx), expand(beta(L::proj(2, t)), a.right(), ctx));
      }
      default: break;
    }
    if (t.is(LK::In)) return L::in(t.index(), t.type(), expand(t.a(), t.index() == 1 ? a.left() : a.right(), ctx));
    if (t.is(LK::Case)) {
      auto [s, st] = neutral(t.a(), ctx);
      auto saved = bind(ctx, t.name(), st.left());
      L b1 = expand(t.b(), a, ctx);
      restore(ctx, t.name(), saved);
      saved = bind(ctx, t.name2(), st.right());
      L b2 = expand(t.c(), a, ctx);
      restore(ctx, t.name2(), saved);
      return L::cases(s, t.name(), b1, t.name2(), b2);
    }
    return neutral(t, ctx).first;
  }

  // Sum eta: case t of in1 y => E[in1 y] | in2 z => E[in2 z]  ~>  E[t].
  L contract(const L& t) {
    switch (t.kind()) {
      case LK::Var:
      case LK::Const:
      case LK::Star: return t;
      case LK::Lam: return L::lam(t.name(), t.type(), contract(t.a()));
      case LK::App: return L::app(contract(t.a()), contract(t.b()));
      case LK::Pair: return L::pair(contract(t.a()), contract(t.b()));
      case LK::Proj: return L::proj(t.index(), contract(t.a()));
      case LK::In: return L::in(t.index(), t.type(), contract(t.a()));
      case LK::Case: {
        L s = contract(t.a());
        L b1 = contract(t.b()), b2 = contract(t.c());
        if (auto e = sum_eta(s, t.name(), b1, t.name2(), b2)) return *e;
        return L::cases(s, t.name(), b1, t.name2(), b2);
      }
    }
    return t;
  }

 private:
  NamePool pool_;

  static std::optional<LamType> bind(LamCtx& c, const std::string& x, const LamType& a) {
    std::optional<LamType> saved;
    if (auto it = c.find(x); it != c.end()) saved = it->second;
    c[x] = a;
    return saved;
  }
  static void restore(LamCtx& c, const std::string& x, const std::optional<LamType>& saved) {
    if (saved)
      c[x] = *saved;
    else
      c.erase(x);
  }

  // The branches of `c` with binders renamed away from `avoid`.
  std::tuple<std::string, L, std::string, L> open_case(const L& c, const std::set<std::string>& avoid) {
    std::string y = c.name(), z = c.name2();
    L b1 = c.b(), b2 = c.c();
    if (avoid.count(y)) {
      std::string y2 = pool_.fresh(y);
      b1 = subst(b1, y, L::var(y2));
      y = y2;
    }
    if (avoid.count(z)) {
      std::string z2 = pool_.fresh(z);
      b2 = subst(b2, z, L::var(z2));
      z = z2;
    }
    return {y, b1, z, b2};
  }

  // An elimination spine headed by a variable or constant; arguments are expanded.
  std::pair<L, LamType> neutral(const L& t, LamCtx& ctx) {
    switch (t.kind()) {
      case LK::Var: {
        auto it = ctx.find(t.name());
        if (it == ctx.end()) fail(ErrorCode::IllTyped, "unbound variable " + t.name() + " during normalization");
        return {t, it->second};
      }
      case LK::Const: return {t, t.type()};
      case LK::App: {
        auto [f, ft] = neutral(t.a(), ctx);
        if (!ft.is(LamType::Kind::Arrow)) fail(ErrorCode::IllTyped, "bad application during normalization");
        return {L::app(f, expand(t.b(), ft.left(), ctx)), LamType::answer()};
      }
      case LK::Proj: {
        auto [p, pt] = neutral(t.a(), ctx);
        if (!pt.is(LamType::Kind::Prod)) fail(ErrorCode::IllTyped, "bad projection during normalization");
        return {L::proj(t.index(), p), t.index() == 1 ? pt.left() : pt.right()};
      }
      default: fail(ErrorCode::Internal, "not a neutral term: " + to_string(t));
    }
  }

  // Walks both branches in lockstep; where they differ they must be in1 Y and
  // in2 Z with Y, Z the (eta-long) bound variables, which become the hole.
  bool common(const L& a, const L& b, const std::string& y, const std::string& z, const std::string& hole,
              L& out) {
    if (a.is(LK::In) && b.is(LK::In) && a.index() == 1 && b.index() == 2 && a.type() == b.type() &&
        is_eta_of(a.a(), L::var(y), a.type().left()) && is_eta_of(b.a(), L::var(z), a.type().right())) {
      out = L::var(hole);
      return true;
    }
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
      case LK::Var:
        if (a.name() != b.name()) return false;
        out = a;
        return true;
      case LK::Const:
        if (a.name() != b.name() || a.type() != b.type()) return false;
        out = a;
        return true;
      case LK::Star: out = a; return true;
      case LK::Lam: {
        if (a.name() != b.name() || a.type() != b.type() || a.name() == y || a.name() == z) return false;
        L body;
        if (!common(a.a(), b.a(), y, z, hole, body)) return false;
        out = L::lam(a.name(), a.type(), body);
        return true;
      }
      case LK::App:
      case LK::Pair: {
        L l, r;
        if (!common(a.a(), b.a(), y, z, hole, l) || !common(a.b(), b.b(), y, z, hole, r)) return false;
        out = a.is(LK::App) ? L::app(l, r) : L::pair(l, r);
        return true;
      }
      case LK::Proj:
      case LK::In: {
        if (a.index() != b.index()) return false;
        L s;
        if (!common(a.a(), b.a(), y, z, hole, s)) return false;
        out = a.is(LK::Proj) ? L::proj(a.index(), s) : L::in(a.index(), a.type(), s);
        return true;
      }
      case LK::Case: {
        if (a.name() != b.name() || a.name2() != b.name2()) return false;
        for (const auto& n : {a.name(), a.name2()})
          if (n == y || n == z) return false;
        L s, c1, c2;
        if (!common(a.a(), b.a(), y, z, hole, s) || !common(a.b(), b.b(), y, z, hole, c1) ||
            !common(a.c(), b.c(), y, z, hole, c2))
          return false;
        out = L::cases(s, a.name(), c1, a.name2(), c2);
        return true;
      }
    }
    return false;
  }

  // `core` itself, or its eta-long expansion at type `a`.
  static bool is_eta_of(const L& t, const L& core, const LamType& a) {
    switch (a.kind()) {
      case LamType::Kind::Unit: return t.is(LK::Star);
      case LamType::Kind::Arrow:
        return t.is(LK::Lam) && t.a().is(LK::App) && alpha_eq(t.a().a(), core) &&
               is_eta_of(t.a().b(), L::var(t.name()), a.left());
      case LamType::Kind::Prod:
        return t.is(LK::Pair) && is_eta_of(t.a(), L::proj(1, core), a.left()) &&
               is_eta_of(t.b(), L::proj(2, core), a.right());
      default: return alpha_eq(t, core);
    }
  }

  std::optional<L> sum_eta(const L& s, const std::string& y, const L& b1, const std::string& z, const L& b2) {
    std::string hole = pool_.fresh("h");
    L e;
    if (!common(b1, b2, y, z, hole, e)) return std::nullopt;
    std::set<std::string> fe = free_vars(e);
    if (fe.count(y) || fe.count(z)) return std::nullopt;
    return subst(e, hole, s);
  }
};

}  // namespace

LamTerm normalize_lam(const LamTerm& t, const LamCtx& ctx) {
  LamType ty = typecheck_lam(t, ctx);
  std::set<std::string> used;
  all_names(t, used);
  for (const auto& [x, _] : ctx) used.insert(x);
  Normalizer n(used);
  LamTerm cur = t;
  for (int round = 0; round < 32; ++round) {
    LamCtx c = ctx;
    LamTerm next = n.contract(n.expand(n.beta(cur), ty, c));
    if (alpha_eq(next, cur)) return next;
    cur = next;
  }
  return cur;
}

bool lam_equal(const LamTerm& a, const LamTerm& b, const LamCtx& ctx) {
  return alpha_eq(normalize_lam(a, ctx), normalize_lam(b, ctx));
}

// ---- printing ----

SExpr to_sexpr(const LamType& a) {
  using K = LamType::Kind;
  switch (a.kind()) {
    case K::Base: return sx_atom("nat~");
    case K::R: return sx_atom("R");
    case K::Unit: return sx_atom("unit");
    case K::Arrow: return sx_list({sx_atom("->"), to_sexpr(a.left()), sx_atom("R")});
    case K::Prod: return sx_list({sx_atom("*"), to_sexpr(a.left()), to_sexpr(a.right())});
    case K::Sum: return sx_list({sx_atom("+"), to_sexpr(a.left()), to_sexpr(a.right())});
  }
  fail(ErrorCode::Internal, "bad type");
}

SExpr to_sexpr(const LamTerm& t) {
  switch (t.kind()) {
    case LK::Var: return sx_atom(t.name());
    case LK::Const: return sx_list({sx_atom("const"), sx_atom(t.name()), to_sexpr(t.type())});
    case LK::Star: return sx_atom("star");
    case LK::Lam:
      return sx_list({sx_atom("lam"), sx_list({sx_atom(t.name()), to_sexpr(t.type())}), to_sexpr(t.a())});
    case LK::App: {
      std::vector<LamTerm> args;
      LamTerm h = t;
      while (h.is(LK::App)) {
        args.push_back(h.b());
        h = h.a();
      }
      std::vector<SExpr> items{to_sexpr(h)};
      for (auto it = args.rbegin(); it != args.rend(); ++it) items.push_back(to_sexpr(*it));
      return sx_list(std::move(items));
    }
    case LK::Pair: return sx_list({sx_atom("pair"), to_sexpr(t.a()), to_sexpr(t.b())});
    case LK::Proj: return sx_list({sx_atom("proj"), sx_atom(std::to_string(t.index())), to_sexpr(t.a())});
    case LK::In:
      return sx_list({sx_atom("in"), sx_atom(std::to_string(t.index())), to_sexpr(t.type()), to_sexpr(t.a())});
    case LK::Case:
      return sx_list({sx_atom("case"), to_sexpr(t.a()), sx_list({sx_atom(t.name()), to_sexpr(t.b())}),
                      sx_list({sx_atom(t.name2()), to_sexpr(t.c())})});
  }
  fail(ErrorCode::Internal, "bad term");
}

std::string to_string(const LamType& a) { return to_string(to_sexpr(a)); }
std::string to_string(const LamTerm& t) { return to_string(to_sexpr(t)); }

}  // namespace kappa
