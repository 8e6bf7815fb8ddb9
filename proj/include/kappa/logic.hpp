#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace kappa {

// ---- sorts ----

class Sort {
 public:
  struct Node;

  Sort() = default;
  static Sort base(const std::string& name);
  static Sort iota();
  static Sort arrow(const Sort& dom, const Sort& cod);
  // doms[0] -> doms[1] -> ... -> cod
  static Sort arrows(const std::vector<Sort>& doms, const Sort& cod);

  explicit operator bool() const { return node_ != nullptr; }
  bool is_base() const;
  bool is_arrow() const { return !is_base(); }
  bool is_iota() const;
  const std::string& name() const;
  const Sort& dom() const;
  const Sort& cod() const;

  friend bool operator==(const Sort& a, const Sort& b);
  friend bool operator!=(const Sort& a, const Sort& b) { return !(a == b); }

 private:
  std::shared_ptr<const Node> node_;
};

struct Sort::Node {
  std::string name;  // empty for arrows
  Sort dom, cod;
};

// ---- individuals ----

class Individual {
 public:
  enum class Kind { Const, Var, App };
  struct Node;

  Individual() = default;
  // Polymorphic constants (k, s, rec) carry their sort instance in `inst`.
  static Individual constant(const std::string& name, std::vector<Sort> inst = {});
  static Individual var(const std::string& name, const Sort& sort);
  static Individual app(const Individual& f, const Individual& a);
  static Individual apps(Individual f, const std::vector<Individual>& args);

  explicit operator bool() const { return node_ != nullptr; }
  Kind kind() const;
  bool is_var() const { return kind() == Kind::Var; }
  bool is_const() const { return kind() == Kind::Const; }
  bool is_app() const { return kind() == Kind::App; }
  const std::string& name() const;
  const std::vector<Sort>& inst() const;
  const Sort& var_sort() const;
  const Individual& fun() const;
  const Individual& arg() const;

  friend bool operator==(const Individual& a, const Individual& b);
  friend bool operator!=(const Individual& a, const Individual& b) { return !(a == b); }

 private:
  std::shared_ptr<const Node> node_;
};

struct Individual::Node {
  Individual::Kind kind;
  std::string name;
  std::vector<Sort> inst;
  Sort sort;
  Individual fun, arg;
};

// Constants of the signature beyond the built-ins, all monomorphic.
using ConstTable = std::map<std::string, Sort>;

// Sort of a constant. Built-ins: 0, S, k[s,t], s[s,t,r], rec[s].
Sort constant_sort(const std::string& name, const std::vector<Sort>& inst,
                   const ConstTable& extra = {});
// Number of sort parameters a built-in constant takes (0 for others).
int constant_arity(const std::string& name);
bool is_builtin_constant(const std::string& name);

Sort infer_sort(const Individual& t, const ConstTable& extra = {});
// Same, additionally requiring each free variable's sort to agree with `env`.
Sort infer_sort(const Individual& t, const std::map<std::string, Sort>& env,
                const ConstTable& extra);

// ---- formulas ----

enum class Polarity { Negative, Positive, Both };
const char* polarity_name(Polarity p);

struct Predicate {
  std::string name;
  std::vector<Sort> args;  // ignored for the sort-generic inequality
  bool negative = true;
};

inline const char* kNeq = "neq";
inline const char* kRel = "r";

class Formula {
 public:
  enum class Kind { Atom, Bot, Imp, And, Forall };
  struct Node;

  Formula() = default;
  static Formula atom(const std::string& pred, std::vector<Individual> args, bool negative);
  static Formula neq(const Individual& t, const Individual& u);
  static Formula rel(const Individual& t);
  static Formula bot();
  static Formula imp(const Formula& a, const Formula& b);
  static Formula conj(const Formula& a, const Formula& b);
  static Formula forall(const std::string& var, const Sort& sort, const Formula& body);

  explicit operator bool() const { return node_ != nullptr; }
  Kind kind() const;
  bool is(Kind k) const { return kind() == k; }
  const std::string& pred() const;
  const std::vector<Individual>& args() const;
  bool negative_atom() const;
  const Formula& lhs() const;
  const Formula& rhs() const;
  const std::string& var() const;
  const Sort& sort() const;
  const Formula& body() const;

  // Structural equality, bound names included. Use alpha_eq for the usual notion.
  friend bool operator==(const Formula& a, const Formula& b);

 private:
  std::shared_ptr<const Node> node_;
};

struct Formula::Node {
  Formula::Kind kind;
  std::string name;  // predicate or bound variable
  std::vector<Individual> args;
  bool negative = true;
  Sort sort;
  Formula a, b;
};

// Derived connectives. These only ever build core formulas.
Formula f_not(const Formula& a);
Formula f_or(const Formula& a, const Formula& b);
Formula f_exists(const std::string& var, const Sort& sort, const Formula& body);
Formula f_eq(const Individual& t, const Individual& u);
Formula f_forall_many(const std::vector<std::pair<std::string, Sort>>& vars, const Formula& body);

enum class Connective { Not, Or, Exists, Eq };
// Generic entry point: Not takes one formula, Or two, Exists a variable and a
// formula, Eq two individuals.
struct DesugarArgs {
  std::vector<Formula> formulas;
  std::vector<Individual> terms;
  std::string var;
  Sort sort;
};
Formula desugar(Connective c, const DesugarArgs& args);

Polarity polarity(const Formula& a);
bool is_negative(const Formula& a);  // negative or both
bool is_positive(const Formula& a);

using VarSet = std::map<std::string, Sort>;
void free_vars(const Individual& t, VarSet& out);
VarSet free_vars(const Individual& t);
void free_vars(const Formula& a, VarSet& out);
VarSet free_vars(const Formula& a);
bool occurs_free(const std::string& x, const Formula& a);
bool occurs_free(const std::string& x, const Individual& t);
// Every variable name appearing anywhere, bound or free.
void all_var_names(const Formula& a, std::set<std::string>& out);

using IndSubst = std::map<std::string, Individual>;
Individual subst(const Individual& t, const IndSubst& s);
// Capture-avoiding simultaneous substitution.
Formula subst(const Formula& a, const IndSubst& s);
Formula subst1(const Formula& a, const std::string& x, const Individual& t);

bool alpha_eq(const Formula& a, const Formula& b);

// A name based on `base` that is not in `avoid`.
std::string fresh_name(const std::string& base, const std::set<std::string>& avoid);

// Hands out names that are distinct from each other and from everything seeded.
struct NamePool {
  std::set<std::string> used;
  std::string fresh(const std::string& base) {
    std::string n = fresh_name(base, used);
    used.insert(n);
    return n;
  }
};

}  // namespace kappa
