#include "nilsum/spec_expr.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace nilsum {

namespace {

struct Cursor {
  const std::string& s;
  size_t pos = 0;

  bool done() const { return pos >= s.size(); }
  char peek() const { return pos < s.size() ? s[pos] : '\0'; }
  bool eat(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }
  void expect(char c) {
    if (!eat(c)) throw SpecParseError(std::string("expected '") + c + "'", pos);
  }
  std::string ident() {
    size_t start = pos;
    while (!done() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
    if (pos == start) throw SpecParseError("expected identifier", pos);
    return s.substr(start, pos - start);
  }
  uint64_t number() {
    size_t start = pos;
    while (!done() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw SpecParseError("expected number", pos);
    return std::stoull(s.substr(start, pos - start));
  }
};

struct DerivationToken {
  std::vector<std::pair<uint32_t, uint32_t>> monomial; // (variable 1-based, exponent)
  uint32_t var = 0;                                    // the d/dx_var, 1-based

  std::string normalized() const {
    std::ostringstream os;
    for (auto [v, e] : monomial) {
      os << "x" << v;
      if (e > 1) os << "^" << e;
    }
    os << "d" << var;
    return os.str();
  }
};

DerivationToken parse_derivation_token(Cursor& c) {
  DerivationToken tok;
  std::map<uint32_t, uint32_t> exps;
  for (;;) {
    if (c.peek() == 'x') {
      c.eat('x');
      uint32_t v = static_cast<uint32_t>(c.number());
      uint32_t e = 1;
      if (c.eat('^')) e = static_cast<uint32_t>(c.number());
      exps[v] += e;
    } else if (c.peek() == 'd') {
      c.eat('d');
      tok.var = static_cast<uint32_t>(c.number());
      break;
    } else {
      throw SpecParseError("expected x<i> or d<i> in derivation token", c.pos);
    }
  }
  for (auto [v, e] : exps) tok.monomial.emplace_back(v, e);
  return tok;
}

Vec derivation_vector(const WittAlgebra& W, const DerivationToken& tok, size_t err_pos) {
  uint32_t m = W.poly.vars();
  if (tok.var < 1 || tok.var > m)
    throw SpecParseError("derivation variable d" + std::to_string(tok.var) + " out of range",
                         err_pos);
  std::vector<uint32_t> exps(m, 0);
  for (auto [v, e] : tok.monomial) {
    if (v < 1 || v > m)
      throw SpecParseError("monomial variable x" + std::to_string(v) + " out of range", err_pos);
    exps[v - 1] += e;
    if (exps[v - 1] >= W.poly.p())
      throw SpecParseError("monomial exponent reaches p (truncated to zero)", err_pos);
  }
  return unit_vec(W.algebra.dim(), W.basis_index(tok.var - 1, W.poly.mono_index(exps)));
}

std::map<std::string, std::string> split_args(Cursor& c) {
  // key=value pairs and bare words; values may contain one level of (...)
  std::map<std::string, std::string> kv;
  size_t bare_count = 0;
  while (!c.done()) {
    size_t start = c.pos;
    std::string word = c.ident();
    if (c.eat('=')) {
      size_t vstart = c.pos;
      int depth = 0;
      while (!c.done() && (depth > 0 || c.peek() != ',')) {
        if (c.peek() == '(') ++depth;
        if (c.peek() == ')') --depth;
        ++c.pos;
      }
      kv[word] = c.s.substr(vstart, c.pos - vstart);
    } else {
      kv["_bare" + std::to_string(bare_count++)] = word;
      (void)start;
    }
    if (!c.done()) c.expect(',');
  }
  return kv;
}

uint32_t need_u32(const std::map<std::string, std::string>& kv, const std::string& key,
                  const std::string& spec) {
  auto it = kv.find(key);
  if (it == kv.end())
    throw SpecParseError("missing argument '" + key + "'", spec.size());
  return static_cast<uint32_t>(std::stoul(it->second));
}

GradedAlgebra graded_sl2(uint32_t p) {
  GradedAlgebra G;
  G.algebra = sl2(p);
  G.degree = {1, 0, -1}; // e, h, f
  validate_grading(G);
  return G;
}

// "zassenhaus(5,1)" or "sl2(7)" inside S=...
std::pair<GradedAlgebra, std::string> parse_s_factor(const std::string& text, size_t base_pos) {
  Cursor c{text, 0};
  std::string name = c.ident();
  c.expect('(');
  if (name == "zassenhaus") {
    uint32_t p = static_cast<uint32_t>(c.number());
    c.expect(',');
    uint32_t n = static_cast<uint32_t>(c.number());
    c.expect(')');
    return {zassenhaus(p, n), "zassenhaus(" + std::to_string(p) + "," + std::to_string(n) + ")"};
  }
  if (name == "sl2") {
    uint32_t p = static_cast<uint32_t>(c.number());
    c.expect(')');
    return {graded_sl2(p), "sl2(" + std::to_string(p) + ")"};
  }
  throw SpecParseError("unknown S factor '" + name + "'", base_pos);
}

} // namespace

ParsedAlgebra parse_algebra_spec(const std::string& spec) {
  ParsedAlgebra out;
  size_t colon = spec.find(':');
  std::string name = colon == std::string::npos ? spec : spec.substr(0, colon);
  std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
  Cursor c{rest, 0};
  auto kv = split_args(c);

  if (name == "sl2") {
    uint32_t p = need_u32(kv, "p", spec);
    out.algebra = sl2(p);
    out.normalized = "sl2:p=" + std::to_string(p);
  } else if (name == "zassenhaus") {
    uint32_t p = need_u32(kv, "p", spec);
    uint32_t n = need_u32(kv, "n", spec);
    GradedAlgebra Z = zassenhaus(p, n);
    out.algebra = Z.algebra;
    out.graded = std::move(Z);
    out.normalized = "zassenhaus:p=" + std::to_string(p) + ",n=" + std::to_string(n);
  } else if (name == "witt") {
    uint32_t p = need_u32(kv, "p", spec);
    uint32_t m = need_u32(kv, "m", spec);
    out.algebra = witt_algebra(p, m).algebra;
    out.normalized = "witt:p=" + std::to_string(p) + ",m=" + std::to_string(m);
  } else if (name == "abelian") {
    uint32_t p = need_u32(kv, "p", spec);
    uint32_t d = need_u32(kv, "dim", spec);
    out.algebra = abelian_algebra(p, d);
    out.normalized = "abelian:p=" + std::to_string(p) + ",dim=" + std::to_string(d);
  } else if (name == "heisenberg") {
    uint32_t p = need_u32(kv, "p", spec);
    out.algebra = heisenberg(p);
    out.normalized = "heisenberg:p=" + std::to_string(p);
  } else if (name == "uppertriangular" || name == "stricttriangular") {
    uint32_t p = need_u32(kv, "p", spec);
    uint32_t n = need_u32(kv, "n", spec);
    out.algebra = name == "uppertriangular" ? upper_triangular(p, n)
                                            : strictly_upper_triangular(p, n);
    out.normalized = name + ":p=" + std::to_string(p) + ",n=" + std::to_string(n);
  } else if (name == "semidirect") {
    auto bare = kv.find("_bare0");
    if (bare == kv.end())
      throw SpecParseError("semidirect needs a module name (two_dim_nonabelian or "
                           "heisenberg_weyl)",
                           colon == std::string::npos ? spec.size() : colon + 1);
    uint32_t p = need_u32(kv, "p", spec);
    ModuleExample ex;
    if (bare->second == "two_dim_nonabelian")
      ex = two_dim_nonabelian_module(p);
    else if (bare->second == "heisenberg_weyl")
      ex = heisenberg_weyl_module(p);
    else
      throw SpecParseError("unknown module '" + bare->second + "'", spec.size());
    out.algebra = semidirect(ex.algebra, ex.action);
    out.normalized = "semidirect:" + bare->second + ",p=" + std::to_string(p);
  } else if (name == "tensor") {
    auto s_it = kv.find("S");
    if (s_it == kv.end()) throw SpecParseError("tensor needs S=...", spec.size());
    auto [S, s_norm] = parse_s_factor(s_it->second, spec.find("S="));
    uint32_t m = need_u32(kv, "m", spec);
    PolyAlgebra O(S.algebra.p(), m);
    out.algebra = tensor_with_poly(S.algebra, O);
    GradedAlgebra G;
    G.algebra = out.algebra;
    for (size_t a = 0; a < S.algebra.dim(); ++a)
      for (size_t b = 0; b < O.dim(); ++b) G.degree.push_back(S.degree[a]);
    validate_grading(G);
    out.graded = std::move(G);
    out.normalized = "tensor:S=" + s_norm + ",m=" + std::to_string(m);
  } else if (name == "G") {
    auto s_it = kv.find("S");
    if (s_it == kv.end()) throw SpecParseError("G needs S=...", spec.size());
    auto [S, s_norm] = parse_s_factor(s_it->second, spec.find("S="));
    uint32_t m = need_u32(kv, "m", spec);
    uint32_t p = S.algebra.p();
    PolyAlgebra O(p, m);
    WittAlgebra W = witt_algebra(p, m);
    auto d_it = kv.find("D");
    if (d_it == kv.end()) throw SpecParseError("G needs D=span(...)", spec.size());
    Cursor dc{d_it->second, 0};
    if (dc.ident() != "span") throw SpecParseError("D must be span(...)", spec.find("D="));
    dc.expect('(');
    std::vector<Vec> gens;
    std::vector<std::string> toks;
    for (;;) {
      DerivationToken tok = parse_derivation_token(dc);
      gens.push_back(derivation_vector(W, tok, spec.find("D=")));
      toks.push_back(tok.normalized());
      if (!dc.eat(',')) break;
    }
    dc.expect(')');
    Subspace D = Subspace::span(p, W.algebra.dim(), gens);
    if (!is_subalgebra(W.algebra, D))
      throw SpecParseError("D is not bracket-closed in W_m", spec.find("D="));
    GradedSum G = graded_sum(S, O, W, D);
    out.algebra = G.g.algebra;
    out.graded = G.g;
    out.graded_sum = std::move(G);
    std::string dtxt;
    for (size_t i = 0; i < toks.size(); ++i) dtxt += (i ? "," : "") + toks[i];
    out.normalized = "G:S=" + s_norm + ",m=" + std::to_string(m) + ",D=span(" + dtxt + ")";
  } else {
    throw SpecParseError("unknown construction '" + name + "'", 0);
  }
  return out;
}

} // namespace nilsum
