#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>

namespace kappa {

class LmType {
 public:
  enum class Kind { Nat, Bot, Arrow, Prod };
  struct Node;

  LmType() = default;
  static LmType nat();
  static LmType bot();
  static LmType arrow(const LmType& a, const LmType& b);
  static LmType prod(const LmType& a, const LmType& b);

  explicit operator bool() const { return node_ != nullptr; }
  Kind kind() const;
  bool is(Kind k) const { return kind() == k; }
  const LmType& left() const;   // domain or first component
  const LmType& right() const;  // codomain or second component

  friend bool operator==(const LmType& a, const LmType& b);
  friend bool operator!=(const LmType& a, const LmType& b) { return !(a == b); }

 private:
  std::shared_ptr<const Node> node_;
};

struct LmType::Node {
  LmType::Kind kind;
  LmType a, b;
};

class LmTerm {
 public:
  enum class Kind { Var, Num, Succ, Pred, Ifz, Fix, Lam, App, Pair, Proj, Mu, Named };
  struct Node;

  LmTerm() = default;
  static LmTerm var(const std::string& x);
  static LmTerm num(std::uint64_t n);
  static LmTerm succ();
  static LmTerm pred();
  static LmTerm ifz(const LmType& a);  // ifz_A : nat -> A -> A -> A
  static LmTerm fix(const LmType& a);  // fix_A : (A -> A) -> A
  static LmTerm lam(const std::string& x, const LmType& a, const LmTerm& body);
  static LmTerm app(const LmTerm& f, const LmTerm& a);
  static LmTerm apps(LmTerm f, std::initializer_list<LmTerm> args);
  static LmTerm pair(const LmTerm& a, const LmTerm& b);
  static LmTerm proj(int i, const LmTerm& m);
  static LmTerm mu(const std::string& alpha, const LmType& a, const LmTerm& body);
  static LmTerm named(const std::string& alpha, const LmTerm& m);

  explicit operator bool() const { return node_ != nullptr; }
  Kind kind() const;
  bool is(Kind k) const { return kind() == k; }
  const std::string& name() const;  // variable, binder or label
  std::uint64_t number() const;
  const LmType& type() const;  // annotation of ifz, fix, lam, mu
  int index() const;
  const LmTerm& left() const;   // body, function, first component, projected term
  const LmTerm& right() const;  // argument, second component

  size_t size() const;
  bool same_node(const LmTerm& o) const { return node_ == o.node_; }
  // Node identity; terms share subterms, so walks memoize on it.
  const void* id() const { return node_.get(); }
  bool shared() const { return node_.use_count() > 1; }
  // Structural equality, bound names included.
  friend bool operator==(const LmTerm& a, const LmTerm& b);

 private:
  std::shared_ptr<const Node> node_;
};

struct LmTerm::Node {
  LmTerm::Kind kind;
  std::string name;
  std::uint64_t n = 0;
  LmType type;
  int index = 0;
  LmTerm a, b;
};

using LmCtx = std::map<std::string, LmType>;

struct Judgment {
  LmCtx lctx;
  LmTerm term;
  LmType type;
  LmCtx mctx;
};

// Church-style checking; returns the unique type.
LmType typecheck(const LmTerm& m, const LmCtx& lctx = {}, const LmCtx& mctx = {});

bool alpha_eq(const LmTerm& a, const LmTerm& b);

std::set<std::string> free_lam_vars(const LmTerm& m);
std::set<std::string> free_mu_vars(const LmTerm& m);

// Capture-avoiding M[N/x].
LmTerm subst(const LmTerm& m, const std::string& x, const LmTerm& n);

// The context shapes used by the structural substitution M{[a]P -> ...}.
struct Shape {
  enum class Kind { Apply, Project, Succ, Pred, Ifz, Rename, Erase };
  Kind kind = Kind::Erase;
  LmTerm arg;           // Apply: N; Ifz: first branch
  LmTerm arg2;          // Ifz: second branch
  int index = 0;        // Project
  LmType ifz_type;      // Ifz
  std::string target;   // Rename

  static Shape apply(const LmTerm& n);
  static Shape project(int i);
  static Shape succ();
  static Shape pred();
  static Shape ifz(const LmType& a, const LmTerm& then_, const LmTerm& else_);
  static Shape rename(const std::string& beta);
  static Shape erase();
};

// Replaces every free [alpha]P of m: Apply/Project/Succ/Pred/Ifz give
// [alpha](F P), Rename gives [beta]P, Erase gives P.
LmTerm structural_subst(const LmTerm& m, const std::string& alpha, const Shape& shape);

// One weak-head call-by-name step; nullopt when the term is in normal form.
std::optional<LmTerm> whnf_step(const LmTerm& m);

struct EvalResult {
  enum class Status { Value, Timeout, Stuck };
  Status status = Status::Stuck;
  std::uint64_t value = 0;
  size_t steps = 0;
  // Set when the numeral was thrown to a free label rather than returned.
  std::optional<std::string> label;
  LmTerm last;
};

// Runs whnf_step until a numeral n, or mu a.[k] n with k free, or until fuel runs out.
EvalResult eval_nat(const LmTerm& m, size_t fuel);

// ---- derived combinators ----

LmType list_type(const LmType& a);  // nat * (nat -> A)

LmTerm mk_omega(const LmType& a);  // fix (lam x. x)
LmTerm mk_rec(const LmType& a);    // A -> (nat -> A -> A) -> nat -> A
LmTerm mk_sub();                   // truncated subtraction nat -> nat -> nat
LmTerm mk_ife(const LmType& a);    // nat -> nat -> A -> A -> A, equal test
LmTerm mk_ifl(const LmType& a);    // nat -> nat -> A -> A -> A, less-than test
LmTerm mk_nil(const LmType& a);    // list A
LmTerm mk_len(const LmType& a);    // list A -> nat
LmTerm mk_ind(const LmType& a);    // list A -> nat -> A
LmTerm mk_extend(const LmType& a); // list A -> A -> list A
LmTerm mk_concat(const LmType& a); // list A -> A -> nat -> A, pads with the element
LmTerm mk_barrec(const LmType& a, const LmType& b);
// (list A -> (A -> B) -> A) -> ((nat -> A) -> B) -> list A -> B

}  // namespace kappa
