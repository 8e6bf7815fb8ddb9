#include "kappa/lambdamu.hpp"

#include <algorithm>
#include <set>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kappa/error.hpp"
#include "kappa/logic.hpp"
#include "kappa/syntax.hpp"

namespace kappa {

// ---- types ----

LmType LmType::nat() {
  static const LmType t = [] {
    LmType r;
    r.node_ = std::make_shared<Node>(Node{Kind::Nat, {}, {}});
    return r;
  }();
  return t;
}

LmType LmType::bot() {
  static const LmType t = [] {
    LmType r;
    r.node_ = std::make_shared<Node>(Node{Kind::Bot, {}, {}});
    return r;
  }();
  return t;
}

LmType LmType::arrow(const LmType& a, const LmType& b) {
  LmType r;
  r.node_ = std::make_shared<Node>(Node{Kind::Arrow, a, b});
  return r;
}

LmType LmType::prod(const LmType& a, const LmType& b) {
  LmType r;
  r.node_ = std::make_shared<Node>(Node{Kind::Prod, a, b});
  return r;
}

LmType::Kind LmType::kind() const { return node_->kind; }
const LmType& LmType::left() const { return node_->a; }
const LmType& LmType::right() const { return node_->b; }

namespace {

struct TypeEq {
  std::set<std::pair<const void*, const void*>> equal;

  bool go(const LmType& a, const LmType& b, const void* x, const void* y) {
    if (x == y) return true;
    if (!x || !y || a.kind() != b.kind()) return false;
    if (a.is(LmType::Kind::Nat) || a.is(LmType::Kind::Bot)) return true;
    if (equal.count({x, y})) return true;
    if (!(a.left() == b.left()) || !(a.right() == b.right())) return false;
    equal.insert({x, y});
    return true;
  }
};

}  // namespace

bool operator==(const LmType& a, const LmType& b) {
  // Nested comparisons share the outermost memo.
  thread_local TypeEq* active = nullptr;
  if (active) return active->go(a, b, a.node_.get(), b.node_.get());
  TypeEq eq;
  active = &eq;
  bool r = eq.go(a, b, a.node_.get(), b.node_.get());
  active = nullptr;
  return r;
}

// ---- terms ----

namespace {

LmTerm::Node node(LmTerm::Kind k) {
  LmTerm::Node n;
  n.kind = k;
  return n;
}

}  // namespace

#define KAPPA_TERM(n)                               \
  LmTerm out;                                       \
  out.node_ = std::make_shared<Node>(std::move(n)); \
  return out

LmTerm LmTerm::var(const std::string& x) {
  Node n = node(Kind::Var);
  n.name = x;
  KAPPA_TERM(n);
}

LmTerm LmTerm::num(std::uint64_t v) {
  Node n = node(Kind::Num);
  n.n = v;
  KAPPA_TERM(n);
}

LmTerm LmTerm::succ() {
  static const LmTerm t = [] {
    Node n = node(Kind::Succ);
    KAPPA_TERM(n);
  }();
  return t;
}

LmTerm LmTerm::pred() {
  static const LmTerm t = [] {
    Node n = node(Kind::Pred);
    KAPPA_TERM(n);
  }();
  return t;
}

LmTerm LmTerm::ifz(const LmType& a) {
  Node n = node(Kind::Ifz);
  n.type = a;
  KAPPA_TERM(n);
}

LmTerm LmTerm::fix(const LmType& a) {
  Node n = node(Kind::Fix);
  n.type = a;
  KAPPA_TERM(n);
}

LmTerm LmTerm::lam(const std::string& x, const LmType& a, const LmTerm& body) {
  Node n = node(Kind::Lam);
  n.name = x;
  n.type = a;
  n.a = body;
  KAPPA_TERM(n);
}

LmTerm LmTerm::app(const LmTerm& f, const LmTerm& a) {
  Node n = node(Kind::App);
  n.a = f;
  n.b = a;
  KAPPA_TERM(n);
}

LmTerm LmTerm::apps(LmTerm f, std::initializer_list<LmTerm> args) {
  for (const auto& a : args) f = app(f, a);
  return f;
}

LmTerm LmTerm::pair(const LmTerm& a, const LmTerm& b) {
  Node n = node(Kind::Pair);
  n.a = a;
  n.b = b;
  KAPPA_TERM(n);
}

LmTerm LmTerm::proj(int i, const LmTerm& m) {
  Node n = node(Kind::Proj);
  n.index = i;
  n.a = m;
  KAPPA_TERM(n);
}

LmTerm LmTerm::mu(const std::string& alpha, const LmType& a, const LmTerm& body) {
  Node n = node(Kind::Mu);
  n.name = alpha;
  n.type = a;
  n.a = body;
  KAPPA_TERM(n);
}

LmTerm LmTerm::named(const std::string& alpha, const LmTerm& m) {
  Node n = node(Kind::Named);
  n.name = alpha;
  n.a = m;
  KAPPA_TERM(n);
}

#undef KAPPA_TERM

LmTerm::Kind LmTerm::kind() const { return node_->kind; }
const std::string& LmTerm::name() const { return node_->name; }
std::uint64_t LmTerm::number() const { return node_->n; }
const LmType& LmTerm::type() const { return node_->type; }
int LmTerm::index() const { return node_->index; }
const LmTerm& LmTerm::left() const { return node_->a; }
const LmTerm& LmTerm::right() const { return node_->b; }

size_t LmTerm::size() const {
  size_t s = 1;
  if (node_->a) s += node_->a.size();
  if (node_->b) s += node_->b.size();
  return s;
}

namespace {

struct TermEq {
  std::set<std::pair<const void*, const void*>> equal;

  bool go(const LmTerm& a, const LmTerm& b) {
    if (a.same_node(b)) return true;
    if (!a || !b) return false;
    std::pair<const void*, const void*> key{a.id(), b.id()};
    if (equal.count(key)) return true;
    if (a.kind() != b.kind() || a.name() != b.name() || a.number() != b.number() || a.index() != b.index())
      return false;
    if (static_cast<bool>(a.type()) != static_cast<bool>(b.type())) return false;
    if (a.type() && a.type() != b.type()) return false;
    if (!go(a.left(), b.left()) || !go(a.right(), b.right())) return false;
    if (a.shared() || b.shared()) equal.insert(key);
    return true;
  }
};

}  // namespace

bool operator==(const LmTerm& a, const LmTerm& b) { return TermEq{}.go(a, b); }

// ---- typing ----

namespace {

class TypeChecker {
 public:
  TypeChecker(const LmCtx& l, const LmCtx& m) : lctx_(l), mctx_(m) {}

  LmType go(const LmTerm& t) {
    if (!t.shared()) return infer(t);
    auto& seen = memo_[t.id()];
    for (const auto& [l, m, a] : seen)
      if (l == lctx_ && m == mctx_) return a;
    LmType a = infer(t);
    seen.push_back({lctx_, mctx_, a});
    return a;
  }

 private:
  LmCtx lctx_, mctx_;
  std::unordered_map<const void*, std::vector<std::tuple<LmCtx, LmCtx, LmType>>> memo_;

  LmType infer(const LmTerm& t) {
    using K = LmTerm::Kind;
    const LmType nat = LmType::nat();
    switch (t.kind()) {
      case K::Var: {
        auto it = lctx_.find(t.name());
        if (it == lctx_.end()) fail(ErrorCode::IllTyped, "unbound variable " + t.name());
        return it->second;
      }
      case K::Num: return nat;
      case K::Succ:
      case K::Pred: return LmType::arrow(nat, nat);
      case K::Ifz: {
        const LmType& a = t.type();
        return LmType::arrow(nat, LmType::arrow(a, LmType::arrow(a, a)));
      }
      case K::Fix: return LmType::arrow(LmType::arrow(t.type(), t.type()), t.type());
      case K::Lam: {
        auto saved = bind(lctx_, t.name(), t.type());
        LmType b = go(t.left());
        unbind(lctx_, t.name(), saved);
        return LmType::arrow(t.type(), b);
      }
      case K::App: {
        LmType f = go(t.left());
        LmType a = go(t.right());
        if (!f.is(LmType::Kind::Arrow))
          fail(ErrorCode::IllTyped, "applying a term of type " + to_string(f) + ": " + to_string(t));
        if (f.left() != a)
          fail(ErrorCode::IllTyped, "argument of type " + to_string(a) + " where " + to_string(f.left()) +
                                        " is expected: " + to_string(t));
        return f.right();
      }
      case K::Pair: {
        LmType a = go(t.left());
        LmType b = go(t.right());
        return LmType::prod(a, b);
      }
      case K::Proj: {
        LmType p = go(t.left());
        if (!p.is(LmType::Kind::Prod))
          fail(ErrorCode::IllTyped, "projecting a term of type " + to_string(p) + ": " + to_string(t));
        if (t.index() != 1 && t.index() != 2) fail(ErrorCode::IllTyped, "projection index must be 1 or 2");
        return t.index() == 1 ? p.left() : p.right();
      }
      case K::Mu: {
        auto saved = bind(mctx_, t.name(), t.type());
        LmType b = go(t.left());
        unbind(mctx_, t.name(), saved);
        if (!b.is(LmType::Kind::Bot))
          fail(ErrorCode::IllTyped, "body of a mu-abstraction has type " + to_string(b) + ", not bot");
        return t.type();
      }
      case K::Named: {
        auto it = mctx_.find(t.name());
        if (it == mctx_.end()) fail(ErrorCode::IllTyped, "unbound label " + t.name());
        LmType want = it->second;
        LmType a = go(t.left());
        if (a != want)
          fail(ErrorCode::IllTyped, "label " + t.name() + " has type " + to_string(want) +
                                        " but receives " + to_string(a));
        return LmType::bot();
      }
    }
    fail(ErrorCode::Internal, "bad term");
  }

  static std::optional<LmType> bind(LmCtx& c, const std::string& x, const LmType& a) {
    std::optional<LmType> saved;
    if (auto it = c.find(x); it != c.end()) saved = it->second;
    c[x] = a;
    return saved;
  }
  static void unbind(LmCtx& c, const std::string& x, const std::optional<LmType>& saved) {
    if (saved)
      c[x] = *saved;
    else
      c.erase(x);
  }
};

}  // namespace

LmType typecheck(const LmTerm& m, const LmCtx& lctx, const LmCtx& mctx) {
  return TypeChecker(lctx, mctx).go(m);
}

// ---- alpha equivalence ----

namespace {

int depth_of(const std::vector<std::string>& b, const std::string& x) {
  for (int i = static_cast<int>(b.size()) - 1; i >= 0; --i)
    if (b[i] == x) return static_cast<int>(b.size()) - 1 - i;
  return -1;
}

struct LmAlpha {
  std::vector<std::string> la, lb, ma, mb;

  bool name_eq(const std::vector<std::string>& ba, const std::vector<std::string>& bb, const std::string& x,
               const std::string& y) {
    int i = depth_of(ba, x), j = depth_of(bb, y);
    return i == j && (i >= 0 || x == y);
  }

  bool go(const LmTerm& a, const LmTerm& b) {
    using K = LmTerm::Kind;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
      case K::Var: return name_eq(la, lb, a.name(), b.name());
      case K::Num: return a.number() == b.number();
      case K::Succ:
      case K::Pred: return true;
      case K::Ifz:
      case K::Fix: return a.type() == b.type();
      case K::Lam: {
        if (a.type() != b.type()) return false;
        la.push_back(a.name());
        lb.push_back(b.name());
        bool r = go(a.left(), b.left());
        la.pop_back();
        lb.pop_back();
        return r;
      }
      case K::App:
      case K::Pair: return go(a.left(), b.left()) && go(a.right(), b.right());
      case K::Proj: return a.index() == b.index() && go(a.left(), b.left());
      case K::Mu: {
        if (a.type() != b.type()) return false;
        ma.push_back(a.name());
        mb.push_back(b.name());
        bool r = go(a.left(), b.left());
        ma.pop_back();
        mb.pop_back();
        return r;
      }
      case K::Named: return name_eq(ma, mb, a.name(), b.name()) && go(a.left(), b.left());
    }
    return false;
  }
};

// Free variables (mu = false) or free labels (mu = true), memoized on shared nodes.
struct FreeNames {
  bool mu;
  std::unordered_map<const void*, std::pair<LmTerm, std::set<std::string>>> memo;

  void add(const LmTerm& t, std::set<std::string>& out) {
    if (!t.shared()) {
      collect(t, out);
      return;
    }
    auto it = memo.find(t.id());
    if (it == memo.end()) {
      std::set<std::string> own;
      collect(t, own);
      it = memo.emplace(t.id(), std::pair{t, std::move(own)}).first;
    }
    out.insert(it->second.second.begin(), it->second.second.end());
  }

  void collect(const LmTerm& t, std::set<std::string>& out) {
    using K = LmTerm::Kind;
    if (t.is(mu ? K::Named : K::Var)) out.insert(t.name());
    if (!t.is(mu ? K::Mu : K::Lam)) {
      for (const LmTerm* c : {&t.left(), &t.right()})
        if (*c) add(*c, out);
      return;
    }
    std::set<std::string> inner;
    add(t.left(), inner);
    inner.erase(t.name());
    out.insert(inner.begin(), inner.end());
  }

  std::set<std::string> of(const LmTerm& t) {
    std::set<std::string> out;
    add(t, out);
    return out;
  }
};

}  // namespace

bool alpha_eq(const LmTerm& a, const LmTerm& b) {
  if (a.same_node(b)) return true;
  LmAlpha al;
  return al.go(a, b);
}

std::set<std::string> free_lam_vars(const LmTerm& m) { return FreeNames{false, {}}.of(m); }

std::set<std::string> free_mu_vars(const LmTerm& m) { return FreeNames{true, {}}.of(m); }

// ---- substitution ----

namespace {

LmTerm rebuild1(const LmTerm& t, const LmTerm& a) {
  using K = LmTerm::Kind;
  if (a.same_node(t.left())) return t;
  switch (t.kind()) {
    case K::Lam: return LmTerm::lam(t.name(), t.type(), a);
    case K::Proj: return LmTerm::proj(t.index(), a);
    case K::Mu: return LmTerm::mu(t.name(), t.type(), a);
    case K::Named: return LmTerm::named(t.name(), a);
    default: fail(ErrorCode::Internal, "rebuild1 on a non-unary node");
  }
}

LmTerm rebuild2(const LmTerm& t, const LmTerm& a, const LmTerm& b) {
  if (a.same_node(t.left()) && b.same_node(t.right())) return t;
  if (t.is(LmTerm::Kind::App)) return LmTerm::app(a, b);
  return LmTerm::pair(a, b);
}

std::set<std::string> united(std::set<std::string> a, const std::set<std::string>& b) {
  a.insert(b.begin(), b.end());
  return a;
}

LmTerm rename_lam(const LmTerm& body, const std::string& from, const std::string& to) {
  return subst(body, from, LmTerm::var(to));
}

LmTerm rename_mu(const LmTerm& body, const std::string& from, const std::string& to) {
  return structural_subst(body, from, Shape::rename(to));
}

struct Substituter {
  std::string x;
  LmTerm n;
  std::set<std::string> fl, fm;
  std::unordered_map<const void*, std::pair<LmTerm, LmTerm>> memo;  // keeps the key node alive

  LmTerm go(const LmTerm& t) {
    if (!t.shared()) return step(t);
    if (auto it = memo.find(t.id()); it != memo.end()) return it->second.second;
    LmTerm r = step(t);
    memo.emplace(t.id(), std::pair{t, r});
    return r;
  }

  LmTerm step(const LmTerm& t) {
    using K = LmTerm::Kind;
    switch (t.kind()) {
      case K::Var: return t.name() == x ? n : t;
      case K::Num:
      case K::Succ:
      case K::Pred:
      case K::Ifz:
      case K::Fix: return t;
      case K::Lam: {
        if (t.name() == x) return t;
        if (fl.count(t.name())) {
          std::set<std::string> fvb = free_lam_vars(t.left());
          if (!fvb.count(x)) return t;
          std::string y = fresh_name(t.name(), united(united(fl, fvb), {x}));
          return LmTerm::lam(y, t.type(), go(rename_lam(t.left(), t.name(), y)));
        }
        return rebuild1(t, go(t.left()));
      }
      case K::Mu: {
        if (fm.count(t.name())) {
          std::set<std::string> fvb = free_lam_vars(t.left());
          if (!fvb.count(x)) return t;
          std::string b = fresh_name(t.name(), united(fm, free_mu_vars(t.left())));
          return LmTerm::mu(b, t.type(), go(rename_mu(t.left(), t.name(), b)));
        }
        return rebuild1(t, go(t.left()));
      }
      case K::Proj:
      case K::Named: return rebuild1(t, go(t.left()));
      case K::App:
      case K::Pair: return rebuild2(t, go(t.left()), go(t.right()));
    }
    return t;
  }
};

}  // namespace

LmTerm subst(const LmTerm& m, const std::string& x, const LmTerm& n) {
  Substituter s{x, n, free_lam_vars(n), free_mu_vars(n), {}};
  return s.go(m);
}

Shape Shape::apply(const LmTerm& n) {
  Shape s;
  s.kind = Kind::Apply;
  s.arg = n;
  return s;
}
Shape Shape::project(int i) {
  Shape s;
  s.kind = Kind::Project;
  s.index = i;
  return s;
}
Shape Shape::succ() {
  Shape s;
  s.kind = Kind::Succ;
  return s;
}
Shape Shape::pred() {
  Shape s;
  s.kind = Kind::Pred;
  return s;
}
Shape Shape::ifz(const LmType& a, const LmTerm& then_, const LmTerm& else_) {
  Shape s;
  s.kind = Kind::Ifz;
  s.ifz_type = a;
  s.arg = then_;
  s.arg2 = else_;
  return s;
}
Shape Shape::rename(const std::string& beta) {
  Shape s;
  s.kind = Kind::Rename;
  s.target = beta;
  return s;
}
Shape Shape::erase() { return Shape{}; }

namespace {

struct Restructurer {
  std::string alpha;
  Shape shape;
  std::set<std::string> fl, fm;
  std::unordered_map<const void*, std::pair<LmTerm, LmTerm>> memo;  // keeps the key node alive

  LmTerm reshape(const LmTerm& p) const {
    using K = Shape::Kind;
    switch (shape.kind) {
      case K::Apply: return LmTerm::named(alpha, LmTerm::app(p, shape.arg));
      case K::Project: return LmTerm::named(alpha, LmTerm::proj(shape.index, p));
      case K::Succ: return LmTerm::named(alpha, LmTerm::app(LmTerm::succ(), p));
      case K::Pred: return LmTerm::named(alpha, LmTerm::app(LmTerm::pred(), p));
      case K::Ifz:
        return LmTerm::named(alpha, LmTerm::apps(LmTerm::ifz(shape.ifz_type), {p, shape.arg, shape.arg2}));
      case K::Rename: return LmTerm::named(shape.target, p);
      case K::Erase: return p;
    }
    return p;
  }

  LmTerm go(const LmTerm& t) {
    if (!t.shared()) return step(t);
    if (auto it = memo.find(t.id()); it != memo.end()) return it->second.second;
    LmTerm r = step(t);
    memo.emplace(t.id(), std::pair{t, r});
    return r;
  }

  LmTerm step(const LmTerm& t) {
    using K = LmTerm::Kind;
    switch (t.kind()) {
      case K::Var:
      case K::Num:
      case K::Succ:
      case K::Pred:
      case K::Ifz:
      case K::Fix: return t;
      case K::Lam: {
        if (fl.count(t.name())) {
          std::string y = fresh_name(t.name(), united(fl, free_lam_vars(t.left())));
          return LmTerm::lam(y, t.type(), go(rename_lam(t.left(), t.name(), y)));
        }
        return rebuild1(t, go(t.left()));
      }
      case K::Mu: {
        if (t.name() == alpha) return t;
        if (fm.count(t.name())) {
          std::string b = fresh_name(t.name(), united(united(fm, free_mu_vars(t.left())), {alpha}));
          return LmTerm::mu(b, t.type(), go(rename_mu(t.left(), t.name(), b)));
        }
        return rebuild1(t, go(t.left()));
      }
      case K::Named: {
        LmTerm inner = go(t.left());
        if (t.name() == alpha) return reshape(inner);
        return rebuild1(t, inner);
      }
      case K::Proj: return rebuild1(t, go(t.left()));
      case K::App:
      case K::Pair: return rebuild2(t, go(t.left()), go(t.right()));
    }
    return t;
  }
};

}  // namespace

LmTerm structural_subst(const LmTerm& m, const std::string& alpha, const Shape& shape) {
  Restructurer r{alpha, shape, {}, {}, {}};
  for (const LmTerm* a : {&shape.arg, &shape.arg2})
    if (*a) {
      r.fl = united(r.fl, free_lam_vars(*a));
      r.fm = united(r.fm, free_mu_vars(*a));
    }
  if (shape.kind == Shape::Kind::Rename) {
    if (shape.target == alpha) return m;
    r.fm.insert(shape.target);
  }
  return r.go(m);
}

// ---- evaluation ----

std::optional<LmTerm> whnf_step(const LmTerm& t) {
  using K = LmTerm::Kind;
  std::vector<LmTerm> frames;
  LmTerm h = t;
  while (h.is(K::App) || h.is(K::Proj)) {
    frames.push_back(h);
    h = h.left();
  }
  std::reverse(frames.begin(), frames.end());
  auto is_arg = [&](size_t i) { return i < frames.size() && frames[i].is(K::App); };
  auto arg = [&](size_t i) -> const LmTerm& { return frames[i].right(); };
  auto rebuild = [&](LmTerm head, size_t from) {
    for (size_t i = from; i < frames.size(); ++i)
      head = frames[i].is(K::App) ? LmTerm::app(head, frames[i].right()) : LmTerm::proj(frames[i].index(), head);
    return head;
  };

  switch (h.kind()) {
    case K::Lam:
      if (!is_arg(0)) return std::nullopt;
      return rebuild(subst(h.left(), h.name(), arg(0)), 1);
    case K::Pair:
      if (frames.empty() || !frames[0].is(K::Proj)) return std::nullopt;
      return rebuild(frames[0].index() == 1 ? h.left() : h.right(), 1);
    case K::Fix:
      if (!is_arg(0)) return std::nullopt;
      return rebuild(LmTerm::app(arg(0), LmTerm::app(h, arg(0))), 1);
    case K::Succ:
    case K::Pred: {
      if (!is_arg(0)) return std::nullopt;
      const LmTerm& n = arg(0);
      bool up = h.is(K::Succ);
      if (n.is(K::Num)) {
        std::uint64_t v = n.number();
        return rebuild(LmTerm::num(up ? v + 1 : (v == 0 ? 0 : v - 1)), 1);
      }
      if (n.is(K::Mu))
        return rebuild(LmTerm::mu(n.name(), LmType::nat(),
                                  structural_subst(n.left(), n.name(), up ? Shape::succ() : Shape::pred())),
                       1);
      auto s = whnf_step(n);
      if (!s) return std::nullopt;
      return rebuild(LmTerm::app(h, *s), 1);
    }
    case K::Ifz: {
      if (!is_arg(0) || !is_arg(1) || !is_arg(2)) return std::nullopt;
      const LmTerm& n = arg(0);
      if (n.is(K::Num)) return rebuild(n.number() == 0 ? arg(1) : arg(2), 3);
      if (n.is(K::Mu))
        return rebuild(LmTerm::mu(n.name(), h.type(),
                                  structural_subst(n.left(), n.name(), Shape::ifz(h.type(), arg(1), arg(2)))),
                       3);
      auto s = whnf_step(n);
      if (!s) return std::nullopt;
      return rebuild(LmTerm::apps(h, {*s, arg(1), arg(2)}), 3);
    }
    case K::Mu: {
      const LmType& a = h.type();
      if (!frames.empty()) {
        if (frames[0].is(K::App)) {
          if (!a.is(LmType::Kind::Arrow)) return std::nullopt;
          return rebuild(LmTerm::mu(h.name(), a.right(), structural_subst(h.left(), h.name(), Shape::apply(arg(0)))),
                         1);
        }
        if (!a.is(LmType::Kind::Prod)) return std::nullopt;
        int i = frames[0].index();
        return rebuild(LmTerm::mu(h.name(), i == 1 ? a.left() : a.right(),
                                  structural_subst(h.left(), h.name(), Shape::project(i))),
                       1);
      }
      if (a.is(LmType::Kind::Bot)) return structural_subst(h.left(), h.name(), Shape::erase());
      const LmTerm& body = h.left();
      if (body.is(K::Named)) {
        const LmTerm& n = body.left();
        if (n.is(K::Mu)) return LmTerm::mu(h.name(), a, structural_subst(n.left(), n.name(), Shape::rename(body.name())));
        if (n.is(K::Num) && body.name() == h.name()) return n;
        auto s = whnf_step(n);
        if (!s) return std::nullopt;
        return LmTerm::mu(h.name(), a, LmTerm::named(body.name(), *s));
      }
      auto s = whnf_step(body);
      if (!s) return std::nullopt;
      return LmTerm::mu(h.name(), a, *s);
    }
    case K::Named: {
      if (!frames.empty()) return std::nullopt;
      const LmTerm& n = h.left();
      if (n.is(K::Mu)) return structural_subst(n.left(), n.name(), Shape::rename(h.name()));
      auto s = whnf_step(n);
      if (!s) return std::nullopt;
      return LmTerm::named(h.name(), *s);
    }
    case K::Var:
    case K::Num:
    case K::App:
    case K::Proj: return std::nullopt;
  }
  return std::nullopt;
}

EvalResult eval_nat(const LmTerm& m, size_t fuel) {
  using K = LmTerm::Kind;
  EvalResult r;
  LmTerm cur = m;
  while (true) {
    if (cur.is(K::Num)) {
      r.status = EvalResult::Status::Value;
      r.value = cur.number();
      break;
    }
    if (cur.is(K::Mu) && cur.left().is(K::Named) && cur.left().name() != cur.name() &&
        cur.left().left().is(K::Num)) {
      r.status = EvalResult::Status::Value;
      r.value = cur.left().left().number();
      r.label = cur.left().name();
      break;
    }
    if (cur.is(K::Named) && cur.left().is(K::Num)) {
      r.status = EvalResult::Status::Value;
      r.value = cur.left().number();
      r.label = cur.name();
      break;
    }
    if (r.steps >= fuel) {
      r.status = EvalResult::Status::Timeout;
      break;
    }
    auto next = whnf_step(cur);
    if (!next) {
      r.status = EvalResult::Status::Stuck;
      break;
    }
    cur = std::move(*next);
    ++r.steps;
  }
  r.last = cur;
  return r;
}

// ---- combinators ----

namespace {

using T = LmTerm;

T v(const char* x) { return T::var(x); }

}  // namespace

LmType list_type(const LmType& a) { return LmType::prod(LmType::nat(), LmType::arrow(LmType::nat(), a)); }

LmTerm mk_omega(const LmType& a) { return T::app(T::fix(a), T::lam("x", a, v("x"))); }

LmTerm mk_rec(const LmType& a) {
  const LmType nat = LmType::nat();
  LmType b = LmType::arrow(nat, LmType::arrow(a, a));
  LmType c = LmType::arrow(nat, a);
  T pd = T::app(T::pred(), v("d"));
  T body = T::apps(T::ifz(a), {v("d"), v("a"), T::apps(v("b"), {pd, T::app(v("c"), pd)})});
  return T::lam("a", a, T::lam("b", b, T::app(T::fix(c), T::lam("c", c, T::lam("d", nat, body)))));
}

LmTerm mk_sub() {
  const LmType nat = LmType::nat();
  LmType f = LmType::arrow(nat, LmType::arrow(nat, nat));
  T body = T::apps(T::ifz(nat), {v("n"), v("m"),
                                 T::apps(v("f"), {T::app(T::pred(), v("m")), T::app(T::pred(), v("n"))})});
  return T::app(T::fix(f), T::lam("f", f, T::lam("m", nat, T::lam("n", nat, body))));
}

LmTerm mk_ife(const LmType& a) {
  const LmType nat = LmType::nat();
  T sub = mk_sub();
  T body = T::apps(T::ifz(a), {T::apps(sub, {v("m"), v("n")}),
                               T::apps(T::ifz(a), {T::apps(sub, {v("n"), v("m")}), v("a"), v("b")}), v("b")});
  return T::lam("m", nat, T::lam("n", nat, T::lam("a", a, T::lam("b", a, body))));
}

LmTerm mk_ifl(const LmType& a) {
  const LmType nat = LmType::nat();
  T body = T::apps(T::ifz(a), {T::apps(mk_sub(), {v("n"), v("m")}), v("b"), v("a")});
  return T::lam("m", nat, T::lam("n", nat, T::lam("a", a, T::lam("b", a, body))));
}

LmTerm mk_nil(const LmType& a) {
  return T::pair(T::num(0), T::lam("x", LmType::nat(), mk_omega(a)));
}

LmTerm mk_len(const LmType& a) { return T::lam("s", list_type(a), T::proj(1, v("s"))); }

LmTerm mk_ind(const LmType& a) {
  return T::lam("s", list_type(a), T::lam("k", LmType::nat(), T::app(T::proj(2, v("s")), v("k"))));
}

LmTerm mk_extend(const LmType& a) {
  T len = T::proj(1, v("s"));
  T ext = T::lam("y", LmType::nat(),
                 T::apps(mk_ife(a), {v("y"), len, v("x"), T::app(T::proj(2, v("s")), v("y"))}));
  return T::lam("s", list_type(a), T::lam("x", a, T::pair(T::app(T::succ(), len), ext)));
}

LmTerm mk_concat(const LmType& a) {
  T body = T::apps(mk_ifl(a), {v("x"), T::proj(1, v("s")), T::app(T::proj(2, v("s")), v("x")), v("t")});
  return T::lam("s", list_type(a), T::lam("t", a, T::lam("x", LmType::nat(), body)));
}

LmTerm mk_barrec(const LmType& a, const LmType& b) {
  LmType la = list_type(a);
  LmType dt = LmType::arrow(la, LmType::arrow(LmType::arrow(a, b), a));
  LmType et = LmType::arrow(LmType::arrow(LmType::nat(), a), b);
  LmType ct = LmType::arrow(la, b);
  T k = T::lam("x", a, T::app(v("c"), T::apps(mk_extend(a), {v("s"), v("x")})));
  T body = T::app(v("e"), T::apps(mk_concat(a), {v("s"), T::apps(v("d"), {v("s"), k})}));
  return T::lam("d", dt, T::lam("e", et, T::app(T::fix(ct), T::lam("c", ct, T::lam("s", la, body)))));
}

}  // namespace kappa
