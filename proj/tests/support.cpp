#include "support.hpp"

#include <algorithm>
#include <filesystem>

#include "kappa/proof.hpp"

namespace kappa::test {

std::string corpus_path(const std::string& file) { return std::string(KAPPA_CORPUS_DIR) + "/" + file; }

const std::vector<std::string>& pi02_files() {
  static const std::vector<std::string> files{"succ.proof", "ident.proof", "add0.proof"};
  return files;
}

std::vector<CorpusProof> corpus_proofs() {
  // positive.proof is rejected by design and bad_binder.proof does not parse.
  static const std::vector<std::string> skip{"positive.proof", "bad_binder.proof"};
  std::vector<std::string> files;
  for (const auto& e : std::filesystem::directory_iterator(KAPPA_CORPUS_DIR)) {
    std::string name = e.path().filename().string();
    if (e.path().extension() == ".proof" && std::find(skip.begin(), skip.end(), name) == skip.end())
      files.push_back(name);
  }
  std::sort(files.begin(), files.end());
  std::vector<CorpusProof> out;
  for (const auto& f : files) {
    Workspace ws = parse_file(corpus_path(f));
    for (const auto& pe : ws.proofs) out.push_back({f, ws.theory, pe});
  }
  return out;
}

// ---- random formulas ----

Sort FormulaGen::sort(int depth) {
  if (depth <= 0 || pick(3) > 0) return Sort::iota();
  return Sort::arrow(sort(depth - 1), sort(depth - 1));
}

Individual FormulaGen::individual(const Sort& s, int depth) {
  std::vector<Individual> vars;
  for (const auto& [x, xs] : scope_)
    if (xs == s) vars.push_back(Individual::var(x, xs));
  int k = pick(4);
  if (!vars.empty() && (k == 0 || depth <= 0)) return vars[pick(vars.size())];
  if (s.is_iota()) {
    if (depth <= 0 || k == 1) return Individual::constant("0");
    if (k == 2) return Individual::app(Individual::constant("S"), individual(s, depth - 1));
    Sort a = sort(1);
    return Individual::app(individual(Sort::arrow(a, s), depth - 1), individual(a, depth - 1));
  }
  // k[s,t] x : t -> s builds a function from any element.
  return Individual::app(Individual::constant("k", {s.cod(), s.dom()}), individual(s.cod(), depth - 1));
}

Formula FormulaGen::atom() {
  std::vector<int> kinds{0};
  if (th_.relativized()) kinds.push_back(1);
  if (th_.predicates().count("A")) kinds.push_back(2);
  if (th_.predicates().count("B")) kinds.push_back(3);
  switch (kinds[pick(kinds.size())]) {
    case 1: return Formula::rel(individual(Sort::iota(), 2));
    case 2: return Formula::atom("A", {}, true);
    case 3: return Formula::atom("B", {}, false);
    default: {
      Sort s = sort(1);
      return Formula::neq(individual(s, 2), individual(s, 2));
    }
  }
}

Formula FormulaGen::formula(int depth) {
  if (depth <= 0) return pick(5) == 0 ? Formula::bot() : atom();
  switch (pick(7)) {
    case 0: return Formula::bot();
    case 1: return atom();
    case 2:
    case 3: return Formula::imp(formula(depth - 1), formula(depth - 1));
    case 4: return Formula::conj(formula(depth - 1), formula(depth - 1));
    default: {
      std::string x = "x" + std::to_string(fresh_++);
      Sort s = sort(1);
      scope_.push_back({x, s});
      Formula body = formula(depth - 1);
      scope_.pop_back();
      return Formula::forall(x, s, body);
    }
  }
}

// ---- the nine equations ----

std::vector<LmEquation> nine_equations(const LmType& a, const LmType& b) {
  using T = LmTerm;
  const LmType bot = LmType::bot();
  auto v = [](const char* x) { return T::var(x); };
  // k (lam y. [al] F y) with k : (Y -> bot) -> bot
  auto thrower = [&](const std::string& al, const LmType& y, std::function<T(T)> f) {
    return T::app(v("k"), T::lam("y", y, T::named(al, f(v("y")))));
  };
  auto kctx = [&](const LmType& y) { return LmType::arrow(LmType::arrow(y, bot), bot); };
  LmType ab = LmType::arrow(a, b), axb = LmType::prod(a, b);
  auto id = [](T t) { return t; };

  std::vector<LmEquation> eqs;
  eqs.push_back({"beta->",
                 T::app(T::lam("x", a, T::apps(v("f"), {v("x"), v("x")})), v("n")),
                 T::apps(v("f"), {v("n"), v("n")}),
                 {{"f", LmType::arrow(a, LmType::arrow(a, b))}, {"n", a}},
                 {}});
  eqs.push_back({"eta->", T::lam("x", a, T::app(v("m"), v("x"))), v("m"), {{"m", ab}}, {}});
  eqs.push_back({"beta-x", T::proj(2, T::pair(v("p"), v("q"))), v("q"), {{"p", a}, {"q", b}}, {}});
  eqs.push_back({"eta-x", T::pair(T::proj(1, v("p")), T::proj(2, v("p"))), v("p"), {{"p", axb}}, {}});
  eqs.push_back({"beta-bot",
                 T::named("g", T::mu("be", a, thrower("be", a, id))),
                 thrower("g", a, id),
                 {{"k", kctx(a)}},
                 {{"g", a}}});
  eqs.push_back({"eta-bot", T::mu("al", a, T::named("al", v("m"))), v("m"), {{"m", a}}, {}});
  eqs.push_back({"zeta->",
                 T::app(T::mu("al", ab, thrower("al", ab, id)), v("n")),
                 T::mu("al", b, thrower("al", ab, [&](T y) { return T::app(y, v("n")); })),
                 {{"k", kctx(ab)}, {"n", a}},
                 {}});
  eqs.push_back({"zeta-x",
                 T::proj(1, T::mu("al", axb, thrower("al", axb, id))),
                 T::mu("al", a, thrower("al", axb, [](T y) { return T::proj(1, y); })),
                 {{"k", kctx(axb)}},
                 {}});
  eqs.push_back({"zeta-bot",
                 T::mu("al", bot, thrower("al", bot, id)),
                 T::app(v("k"), T::lam("y", bot, v("y"))),
                 {{"k", kctx(bot)}},
                 {}});
  return eqs;
}

// ---- recursor pool ----

namespace {

LmTerm lam2(const std::function<LmTerm(LmTerm, LmTerm)>& body) {
  LmType nat = LmType::nat();
  return LmTerm::lam("n", nat, LmTerm::lam("r", nat, body(LmTerm::var("n"), LmTerm::var("r"))));
}

LmTerm s(const LmTerm& t) { return LmTerm::app(LmTerm::succ(), t); }
LmTerm p(const LmTerm& t) { return LmTerm::app(LmTerm::pred(), t); }
LmTerm ifz(const LmTerm& c, const LmTerm& t, const LmTerm& e) {
  return LmTerm::apps(LmTerm::ifz(LmType::nat()), {c, t, e});
}
LmTerm num(std::uint64_t n) { return LmTerm::num(n); }

using Step = std::function<std::uint64_t(std::uint64_t, std::uint64_t)>;

RecCase make(const std::string& name, const LmTerm& a, std::uint64_t a0, const LmTerm& b, Step step) {
  return {name, a, b, [a0, step](std::uint64_t n) {
            std::uint64_t r = a0;
            for (std::uint64_t k = 0; k < n; ++k) r = step(k, r);
            return r;
          }};
}

std::uint64_t dec(std::uint64_t x) { return x == 0 ? 0 : x - 1; }

}  // namespace

std::vector<RecCase> rec_pool() {
  LmTerm idnat = LmTerm::lam("x", LmType::nat(), LmTerm::var("x"));
  return {
      make("count", num(0), 0, lam2([](LmTerm, LmTerm r) { return s(r); }), [](auto, auto r) { return r + 1; }),
      make("odd", num(3), 3, lam2([](LmTerm, LmTerm r) { return s(s(r)); }), [](auto, auto r) { return r + 2; }),
      make("prev", num(5), 5, lam2([](LmTerm n, LmTerm) { return n; }), [](auto k, auto) { return k; }),
      make("const", num(7), 7, lam2([](LmTerm, LmTerm r) { return r; }), [](auto, auto r) { return r; }),
      make("floor", num(0), 0, lam2([](LmTerm, LmTerm r) { return p(r); }), [](auto, auto r) { return dec(r); }),
      make("skip", num(1), 1, lam2([](LmTerm n, LmTerm r) { return ifz(n, r, s(r)); }),
           [](auto k, auto r) { return k == 0 ? r : r + 1; }),
      make("succ-n", num(2), 2, lam2([](LmTerm n, LmTerm) { return s(n); }), [](auto k, auto) { return k + 1; }),
      make("down", num(4), 4, lam2([](LmTerm, LmTerm r) { return p(r); }),
           [](auto, auto r) { return r == 0 ? 0 : r - 1; }),
      make("roundtrip", s(s(num(0))), 2, lam2([](LmTerm, LmTerm r) { return s(p(s(r))); }),
           [](auto, auto r) { return r + 1; }),
      make("early", LmTerm::app(idnat, num(6)), 6, lam2([](LmTerm n, LmTerm r) { return ifz(p(n), s(r), r); }),
           [](auto k, auto r) { return k <= 1 ? r + 1 : r; }),
  };
}

LmTerm numeral_list(const std::vector<std::uint64_t>& xs) {
  LmType nat = LmType::nat();
  // lam x. ifz x a0 (ifz (pred x) a1 (... omega))
  LmTerm body = mk_omega(nat);
  for (size_t i = xs.size(); i-- > 0;) {
    LmTerm idx = LmTerm::var("x");
    for (size_t j = 0; j < i; ++j) idx = p(idx);
    body = ifz(idx, num(xs[i]), body);
  }
  // Index i is tested as pred^i x = 0 after all smaller indices failed, so x = i.
  return LmTerm::pair(num(xs.size()), LmTerm::lam("x", nat, body));
}

}  // namespace kappa::test
