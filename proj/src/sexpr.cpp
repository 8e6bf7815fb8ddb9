#include "kappa/sexpr.hpp"

#include <cctype>

#include "kappa/error.hpp"

namespace kappa {

std::string SExpr::where() const {
  return std::to_string(pos.line) + ":" + std::to_string(pos.col);
}

namespace {

class Reader {
 public:
  explicit Reader(const std::string& t) : text_(t) {}

  std::vector<SExpr> all() {
    std::vector<SExpr> out;
    skip();
    while (i_ < text_.size()) {
      out.push_back(read());
      skip();
    }
    return out;
  }

 private:
  const std::string& text_;
  size_t i_ = 0;
  int line_ = 1, col_ = 1;

  void bump() {
    if (text_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }

  void skip() {
    while (i_ < text_.size()) {
      char c = text_[i_];
      if (c == ';') {
        while (i_ < text_.size() && text_[i_] != '\n') bump();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        bump();
      } else {
        break;
      }
    }
  }

  SrcPos here() const { return {line_, col_}; }

  SExpr read() {
    SExpr e;
    e.pos = here();
    char c = text_[i_];
    if (c == ')') fail(ErrorCode::Syntax, e.where() + ": unexpected ')'");
    if (c == '(') {
      bump();
      skip();
      while (true) {
        if (i_ >= text_.size())
          fail(ErrorCode::Syntax, e.where() + ": unterminated list");
        if (text_[i_] == ')') {
          bump();
          break;
        }
        e.items.push_back(read());
        skip();
      }
      return e;
    }
    e.is_atom = true;
    while (i_ < text_.size()) {
      char d = text_[i_];
      if (d == '(' || d == ')' || d == ';' || std::isspace(static_cast<unsigned char>(d))) break;
      e.atom.push_back(d);
      bump();
    }
    return e;
  }
};

}  // namespace

std::vector<SExpr> parse_sexprs(const std::string& text) { return Reader(text).all(); }

SExpr parse_one_sexpr(const std::string& text) {
  auto v = parse_sexprs(text);
  if (v.size() != 1)
    fail(ErrorCode::Syntax, "expected exactly one form, found " + std::to_string(v.size()));
  return v[0];
}

std::string to_string(const SExpr& e) {
  if (e.is_atom) return e.atom;
  std::string s = "(";
  for (size_t i = 0; i < e.items.size(); ++i) {
    if (i) s += ' ';
    s += to_string(e.items[i]);
  }
  return s + ")";
}

}  // namespace kappa
