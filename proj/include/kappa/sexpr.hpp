#pragma once

#include <string>
#include <vector>

namespace kappa {

struct SrcPos {
  int line = 0;
  int col = 0;
};

// A parsed S-expression. Atoms keep their text; lists keep their children.
struct SExpr {
  bool is_atom = false;
  std::string atom;
  std::vector<SExpr> items;
  SrcPos pos;

  bool is_list() const { return !is_atom; }
  bool is(const char* s) const { return is_atom && atom == s; }
  // True when this is a non-empty list whose head atom is `s`.
  bool head_is(const char* s) const { return !is_atom && !items.empty() && items[0].is(s); }
  std::string where() const;
};

// Parses every top-level form in `text`. `;` starts a line comment.
std::vector<SExpr> parse_sexprs(const std::string& text);
SExpr parse_one_sexpr(const std::string& text);

std::string to_string(const SExpr& e);

}  // namespace kappa
