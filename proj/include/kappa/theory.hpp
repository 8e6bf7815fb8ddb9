#pragma once

#include <map>
#include <string>
#include <vector>

#include "kappa/logic.hpp"

namespace kappa {

using SortedVar = std::pair<std::string, Sort>;

// An axiom reference together with its scheme instantiation.
//   refl[s]  def-k[s,t]  def-s[s,t,r]  def-recz[s]  def-recs[s]
//   rel-k[s,t]  rel-s[s,t,r]  rel-rec[s]  snz  rel0  rels
//   leib  : formula A, binders (x), params
//   ind   : formula A, binders (x:i), params
//   dc    : formula A, binders (x:i, y:s, z:s), params
// User axioms take no instantiation.
struct AxiomInstance {
  std::string name;
  std::vector<Sort> sorts;
  Formula formula;
  std::vector<SortedVar> binders;
  std::vector<SortedVar> params;

  friend bool operator==(const AxiomInstance& a, const AxiomInstance& b);
};

enum class TheoryKind { PAw, CAw, PAwR, CAwR };

class Theory {
 public:
  static Theory paw();
  static Theory caw();
  static Theory pawr();
  static Theory cawr();
  static Theory by_name(const std::string& name);

  const std::string& name() const { return name_; }
  TheoryKind kind() const { return kind_; }
  bool relativized() const { return kind_ == TheoryKind::PAwR || kind_ == TheoryKind::CAwR; }
  bool has_choice() const { return kind_ == TheoryKind::CAw || kind_ == TheoryKind::CAwR; }

  // The relativized counterpart (PAw -> PAw^r, CAw -> CAw^r); user axioms are relativized.
  Theory relativize() const;

  const ConstTable& constants() const { return constants_; }
  const std::map<std::string, Predicate>& predicates() const { return predicates_; }
  const std::map<std::string, Formula>& user_axioms() const { return user_axioms_; }

  void add_constant(const std::string& name, const Sort& sort);
  void add_predicate(const Predicate& p);
  void add_axiom(const std::string& name, const Formula& f);

  bool has_axiom(const std::string& name) const;
  bool is_scheme(const std::string& name) const;

  // Validates the instance against the scheme template and returns the closed axiom.
  Formula instantiate(const AxiomInstance& inst) const;

  // Throws unless `a` is a well-formed formula of this signature.
  void check_formula(const Formula& a) const;
  void check_individual(const Individual& t) const;

 private:
  std::string name_;
  TheoryKind kind_ = TheoryKind::PAw;
  ConstTable constants_;
  std::map<std::string, Predicate> predicates_;
  std::map<std::string, Formula> user_axioms_;

  static Theory make(const std::string& name, TheoryKind k);
};

// The names of the built-in axioms of the theory, scheme names included.
std::vector<std::string> builtin_axiom_names(TheoryKind k);

}  // namespace kappa
