#pragma once

#include <string>

#include "kappa/lambdamu.hpp"
#include "kappa/logic.hpp"
#include "kappa/proof.hpp"
#include "kappa/sexpr.hpp"
#include "kappa/theory.hpp"

namespace kappa {

// ---- printing ----

SExpr to_sexpr(const Sort& s);
SExpr to_sexpr(const Individual& t);
SExpr to_sexpr(const Formula& a);  // re-sugars not, eq, or, exists
SExpr to_sexpr(const AxiomInstance& in);
SExpr to_sexpr(const Proof& p);
SExpr to_sexpr(const LmType& a);
SExpr to_sexpr(const LmTerm& m);

std::string to_string(const Sort& s);
std::string to_string(const Individual& t);
std::string to_string(const Formula& a);
std::string to_string(const Proof& p);
std::string to_string(const LmType& a);
std::string to_string(const LmTerm& m);

// One line when it fits in `width` columns, else the head on the first line
// and each remaining child on its own indented line.
std::string pretty(const SExpr& e, int width = 100);

SExpr sx_atom(const std::string& s);
SExpr sx_list(std::vector<SExpr> items);

// ---- parsing ----

// Variables in scope, by name. Identifiers resolve to a variable first and
// to a constant otherwise.
using Scope = std::map<std::string, Sort>;

Sort parse_sort(const SExpr& e);
bool looks_like_sort(const SExpr& e);

// Bare k, s and rec get their sort instance inferred; (@ k s t) fixes it.
Individual parse_individual(const SExpr& e, const Scope& scope, const Theory& th);
Formula parse_formula(const SExpr& e, const Scope& scope, const Theory& th);
Proof parse_proof(const SExpr& e, const Scope& scope, const Theory& th);

LmType parse_lm_type(const SExpr& e);
LmTerm parse_lm_term(const SExpr& e);

}  // namespace kappa
