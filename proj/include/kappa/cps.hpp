#pragma once

#include <map>
#include <memory>
#include <string>

#include "kappa/lambdamu.hpp"
#include "kappa/sexpr.hpp"

namespace kappa {

// Types of the target calculus. Every arrow ends in R.
class LamType {
 public:
  enum class Kind { Base, R, Arrow, Prod, Unit, Sum };
  struct Node;

  LamType() = default;
  static LamType base();  // nat~
  static LamType answer();
  static LamType arrow(const LamType& a);  // a -> R
  static LamType prod(const LamType& a, const LamType& b);
  static LamType unit();
  static LamType sum(const LamType& a, const LamType& b);

  explicit operator bool() const { return node_ != nullptr; }
  Kind kind() const;
  bool is(Kind k) const { return kind() == k; }
  const LamType& left() const;  // domain, or first component
  const LamType& right() const;

  friend bool operator==(const LamType& a, const LamType& b);
  friend bool operator!=(const LamType& a, const LamType& b) { return !(a == b); }

 private:
  std::shared_ptr<const Node> node_;
};

struct LamType::Node {
  LamType::Kind kind;
  LamType a, b;
};

class LamTerm {
 public:
  enum class Kind { Var, Const, Lam, App, Pair, Proj, Star, In, Case };
  struct Node;

  LamTerm() = default;
  static LamTerm var(const std::string& x);
  static LamTerm constant(const std::string& c, const LamType& t);
  static LamTerm lam(const std::string& x, const LamType& a, const LamTerm& body);
  static LamTerm app(const LamTerm& f, const LamTerm& a);
  static LamTerm pair(const LamTerm& a, const LamTerm& b);
  static LamTerm proj(int i, const LamTerm& t);
  static LamTerm star();
  // in_i at the full sum type
  static LamTerm in(int i, const LamType& sum, const LamTerm& t);
  static LamTerm cases(const LamTerm& t, const std::string& y, const LamTerm& b1, const std::string& z,
                       const LamTerm& b2);

  explicit operator bool() const { return node_ != nullptr; }
  Kind kind() const;
  bool is(Kind k) const { return kind() == k; }
  const std::string& name() const;   // Var, Const, Lam binder, first case binder
  const std::string& name2() const;  // second case binder
  const LamType& type() const;       // Const, Lam, In
  int index() const;
  const LamTerm& a() const;  // body, function, first component, scrutinee
  const LamTerm& b() const;  // argument, second component, first branch
  const LamTerm& c() const;  // second branch

  size_t size() const;
  bool same_node(const LamTerm& o) const { return node_ == o.node_; }

 private:
  std::shared_ptr<const Node> node_;
};

struct LamTerm::Node {
  LamTerm::Kind kind;
  std::string name, name2;
  LamType type;
  int index = 0;
  LamTerm a, b, c;
};

using LamCtx = std::map<std::string, LamType>;

LamType cps_type(const LmType& a);

// The variable names a lambda-mu variable and label become after translation.
std::string cps_var(const std::string& x);
std::string cps_label(const std::string& alpha);

// Translates a well-typed term; the result has type (A~ -> R).
LamTerm cps_term(const LmTerm& m, const LmCtx& lctx = {}, const LmCtx& mctx = {});
// The translated context: x~ : A~ -> R and alpha~ : B~.
LamCtx cps_ctx(const LmCtx& lctx, const LmCtx& mctx);

LamType typecheck_lam(const LamTerm& t, const LamCtx& ctx = {});

bool alpha_eq(const LamTerm& a, const LamTerm& b);
std::set<std::string> free_vars(const LamTerm& t);
LamTerm subst(const LamTerm& t, const std::string& x, const LamTerm& n);

// beta, commuting conversions, eta-long expansion and sum eta contraction,
// repeated until stable. Two fix-free terms are beta-eta equal when their
// normal forms are alpha-equal.
LamTerm normalize_lam(const LamTerm& t, const LamCtx& ctx = {});
bool lam_equal(const LamTerm& a, const LamTerm& b, const LamCtx& ctx = {});

SExpr to_sexpr(const LamType& a);
SExpr to_sexpr(const LamTerm& t);
std::string to_string(const LamType& a);
std::string to_string(const LamTerm& t);

}  // namespace kappa
