#include "nilsum/constructions.hpp"

#include <algorithm>
#include <sstream>

namespace nilsum {

uint32_t binom_mod(int64_t n, int64_t k, uint32_t p) {
  if (k < 0 || n < 0 || k > n) return 0;
  Fp F(p);
  // factorials of digits stay below p
  std::vector<uint32_t> fact(p, 1);
  for (uint32_t i = 1; i < p; ++i) fact[i] = F.mul(fact[i - 1], i);
  uint32_t result = 1;
  while (n > 0 || k > 0) {
    uint32_t nd = static_cast<uint32_t>(n % p);
    uint32_t kd = static_cast<uint32_t>(k % p);
    if (kd > nd) return 0;
    uint32_t c = F.mul(fact[nd], F.inv(F.mul(fact[kd], fact[nd - kd])));
    result = F.mul(result, c);
    n /= p;
    k /= p;
  }
  return result;
}

// ---------------------------------------------------------------- Witt W_m

Derivation WittAlgebra::to_derivation(const Vec& w) const {
  Derivation d;
  d.components.assign(poly.vars(), poly.zero());
  for (uint32_t var = 0; var < poly.vars(); ++var)
    for (size_t mono = 0; mono < poly.dim(); ++mono)
      d.components[var][mono] = w[basis_index(var, mono)];
  return d;
}

Vec WittAlgebra::from_derivation(const Derivation& d) const {
  Vec w(algebra.dim(), 0);
  for (uint32_t var = 0; var < poly.vars(); ++var)
    for (size_t mono = 0; mono < poly.dim(); ++mono)
      w[basis_index(var, mono)] = d.components[var][mono];
  return w;
}

Subspace WittAlgebra::standard_filtration_zero() const {
  std::vector<Vec> rows;
  for (uint32_t var = 0; var < poly.vars(); ++var)
    for (size_t mono = 1; mono < poly.dim(); ++mono)
      rows.push_back(unit_vec(algebra.dim(), basis_index(var, mono)));
  return Subspace::span(algebra.p(), algebra.dim(), rows);
}

WittAlgebra witt_algebra(uint32_t p, uint32_t m, uint64_t budget) {
  PolyAlgebra O(p, m, budget);
  uint64_t dim = static_cast<uint64_t>(m) * O.dim();
  if (dim > budget) throw BudgetExceeded("witt_algebra", dim, budget);
  std::vector<std::string> labels;
  labels.reserve(dim);
  for (uint32_t var = 0; var < m; ++var)
    for (size_t mono = 0; mono < O.dim(); ++mono) {
      std::string head = O.mono_label(mono);
      labels.push_back((head == "1" ? "" : head + "*") + "d" + std::to_string(var + 1));
    }
  LieAlgebra W(p, static_cast<size_t>(dim), labels);

  // [x^a d_i, x^b d_j] = b_i x^{a+b-e_i} d_j - a_j x^{a+b-e_j} d_i
  auto term_of = [&O, m, p](const std::vector<uint32_t>& ea, const std::vector<uint32_t>& eb,
                            uint32_t lower_var, uint32_t target_var) -> std::optional<Term> {
    uint32_t coeff = eb[lower_var];
    if (coeff == 0) return std::nullopt;
    std::vector<uint32_t> e(m);
    for (uint32_t t = 0; t < m; ++t) {
      uint32_t s = ea[t] + eb[t];
      if (t == lower_var) --s; // b_i >= 1 here
      if (s >= p) return std::nullopt;
      e[t] = s;
    }
    return Term{static_cast<size_t>(target_var) * O.dim() + O.mono_index(e), coeff};
  };

  for (size_t jj = 1; jj < W.dim(); ++jj)
    for (size_t ii = 0; ii < jj; ++ii) {
      uint32_t vi = static_cast<uint32_t>(ii / O.dim());
      uint32_t vj = static_cast<uint32_t>(jj / O.dim());
      std::vector<uint32_t> ea = O.exponents(ii % O.dim());
      std::vector<uint32_t> eb = O.exponents(jj % O.dim());
      Fp F(p);
      Vec acc(W.dim(), 0);
      if (auto t = term_of(ea, eb, vi, vj)) acc[t->k] = F.add(acc[t->k], t->c);
      // swap roles for the second summand: -(a_j) x^{a+b-e_j} d_i
      if (auto t = term_of(eb, ea, vj, vi)) acc[t->k] = F.sub(acc[t->k], t->c);
      std::vector<Term> terms;
      for (size_t k = 0; k < W.dim(); ++k)
        if (acc[k]) terms.push_back({k, acc[k]});
      W.set_bracket(ii, jj, std::move(terms));
    }

  WittAlgebra out{std::move(W), std::move(O)};
  return out;
}

// ------------------------------------------------------------- Zassenhaus

GradedAlgebra zassenhaus(uint32_t p, uint32_t n, uint64_t budget) {
  uint64_t dim = 1;
  for (uint32_t i = 0; i < n; ++i) {
    dim *= p;
    if (dim > budget) throw BudgetExceeded("zassenhaus", dim, budget);
  }
  std::vector<std::string> labels;
  for (uint64_t i = 0; i < dim; ++i)
    labels.push_back("e(" + std::to_string(static_cast<int64_t>(i) - 1) + ")");
  LieAlgebra S(p, static_cast<size_t>(dim), labels);
  int64_t top = static_cast<int64_t>(dim) - 2; // degrees run -1 .. p^n - 2
  for (int64_t i = -1; i <= top; ++i)
    for (int64_t j = i + 1; j <= top; ++j) {
      int64_t d = i + j;
      if (d < -1 || d > top) continue;
      Fp F(p);
      uint32_t c = F.sub(binom_mod(i + j + 1, j, p), binom_mod(i + j + 1, i, p));
      if (!c) continue;
      S.set_bracket(static_cast<size_t>(i + 1), static_cast<size_t>(j + 1),
                    {{static_cast<size_t>(d + 1), c}});
    }
  GradedAlgebra G;
  G.algebra = std::move(S);
  for (int64_t i = -1; i <= top; ++i) G.degree.push_back(static_cast<int>(i));
  StructureReport rep = validate_structure(G.algebra);
  if (!rep.ok)
    throw std::runtime_error("zassenhaus: structure constants violate Jacobi (" +
                             std::to_string(rep.violations.size()) + " triples)");
  validate_grading(G);
  return G;
}

Mat zassenhaus_witt_rescaling(uint32_t p) {
  Fp F(p);
  Mat M(p, p, p);
  uint32_t fact = 1;
  for (uint32_t t = 0; t < p; ++t) {
    if (t > 0) fact = F.mul(fact, t); // t! stays nonzero for t < p
    M.at(t, t) = F.inv(fact);         // row t: e_{t-1} -> x^t d / t!
  }
  return M;
}

// ------------------------------------------------------------------- sl2

LieAlgebra sl2(uint32_t p) {
  if (p <= 2) throw std::invalid_argument("sl2: requires p > 2");
  LieAlgebra L(p, 3, {"e", "h", "f"});
  Fp F(p);
  L.set_bracket(0, 1, {{0, F.neg(2)}});   // [e,h] = -2e
  L.set_bracket(0, 2, {{1, 1}});          // [e,f] = h
  L.set_bracket(1, 2, {{2, F.neg(2)}});   // [h,f] = -2f
  return L;
}

// ---------------------------------------------------------------- tensors

LieAlgebra tensor_with_poly(const LieAlgebra& S, const PolyAlgebra& O) {
  if (S.p() != O.p()) throw std::invalid_argument("tensor_with_poly: characteristic mismatch");
  size_t od = O.dim();
  size_t dim = S.dim() * od;
  std::vector<std::string> labels;
  labels.reserve(dim);
  for (size_t a = 0; a < S.dim(); ++a)
    for (size_t b = 0; b < od; ++b) labels.push_back(S.label(a) + "&" + O.mono_label(b));
  LieAlgebra T(S.p(), dim, labels);
  Fp F(S.p());
  for (size_t a = 0; a < S.dim(); ++a)
    for (size_t c = a + 1; c < S.dim(); ++c) {
      const auto& terms = S.basis_bracket(a, c);
      if (terms.empty()) continue;
      for (size_t b = 0; b < od; ++b)
        for (size_t d = 0; d < od; ++d) {
          Vec prod = O.mul(O.monomial(O.exponents(b)), O.monomial(O.exponents(d)));
          std::vector<Term> tt;
          for (const Term& t : terms)
            for (size_t k = 0; k < od; ++k)
              if (prod[k]) tt.push_back({t.k * od + k, F.mul(t.c, prod[k])});
          T.set_bracket(a * od + b, c * od + d, std::move(tt));
        }
    }
  return T;
}

// --------------------------------------------------------- graded sum G

size_t GradedSum::s_index_of_degree(int d) const {
  for (size_t i = 0; i < s.degree.size(); ++i)
    if (s.degree[i] == d) return i;
  throw std::invalid_argument("s_index_of_degree: degree not present");
}

Vec GradedSum::e_tensor(int deg, const Vec& f) const {
  size_t si = s_index_of_degree(deg);
  Vec v(g.algebra.dim(), 0);
  for (size_t b = 0; b < om.dim(); ++b) v[index_of(si, b)] = f[b];
  return v;
}

Vec GradedSum::d_part(const Vec& v) const {
  return Vec(v.begin() + tensor_dim, v.end());
}

Subspace GradedSum::project_D(const Subspace& U) const {
  size_t dd = g.algebra.dim() - tensor_dim;
  std::vector<Vec> rows;
  for (size_t i = 0; i < U.dim(); ++i) rows.push_back(d_part(U.basis_vector(i)));
  return Subspace::span(g.algebra.p(), dd, rows);
}

Vec GradedSum::d_part_in_wm(const Vec& v) const {
  Vec w(wm.algebra.dim(), 0);
  Vec coords = d_part(v);
  for (size_t t = 0; t < coords.size(); ++t)
    if (coords[t]) vec_add_scaled(g.algebra.p(), w, coords[t], d_sub.basis_vector(t));
  return w;
}

Subspace GradedSum::tensor_block() const {
  std::vector<Vec> rows;
  for (size_t i = 0; i < tensor_dim; ++i) rows.push_back(unit_vec(g.algebra.dim(), i));
  return Subspace::span(g.algebra.p(), g.algebra.dim(), rows);
}

Subspace GradedSum::d_block() const {
  std::vector<Vec> rows;
  for (size_t i = tensor_dim; i < g.algebra.dim(); ++i)
    rows.push_back(unit_vec(g.algebra.dim(), i));
  return Subspace::span(g.algebra.p(), g.algebra.dim(), rows);
}

GradedSum graded_sum(const GradedAlgebra& S, const PolyAlgebra& O, const WittAlgebra& W,
                     const Subspace& D) {
  if (S.algebra.p() != O.p() || W.algebra.p() != O.p())
    throw std::invalid_argument("graded_sum: characteristic mismatch");
  if (W.poly.dim() != O.dim() || W.poly.vars() != O.vars())
    throw std::invalid_argument("graded_sum: W_m does not act on this O_m");
  if (D.ambient_dim() != W.algebra.dim())
    throw std::invalid_argument("graded_sum: D must live in W_m");
  if (!is_subalgebra(W.algebra, D))
    throw std::invalid_argument("graded_sum: D is not bracket-closed in W_m");

  size_t od = O.dim();
  size_t tensor_dim = S.algebra.dim() * od;
  size_t dim = tensor_dim + D.dim();
  uint32_t p = O.p();
  Fp F(p);

  std::vector<std::string> labels;
  labels.reserve(dim);
  for (size_t a = 0; a < S.algebra.dim(); ++a)
    for (size_t b = 0; b < od; ++b) labels.push_back(S.algebra.label(a) + "&" + O.mono_label(b));
  for (size_t t = 0; t < D.dim(); ++t) labels.push_back("D" + std::to_string(t + 1));

  LieAlgebra G(p, dim, labels);

  // tensor block: [s&f, t&g] = [s,t] & fg
  for (size_t a = 0; a < S.algebra.dim(); ++a)
    for (size_t c = a + 1; c < S.algebra.dim(); ++c) {
      const auto& terms = S.algebra.basis_bracket(a, c);
      if (terms.empty()) continue;
      for (size_t b = 0; b < od; ++b)
        for (size_t d = 0; d < od; ++d) {
          Vec prod = O.mul(O.monomial(O.exponents(b)), O.monomial(O.exponents(d)));
          std::vector<Term> tt;
          for (const Term& t : terms)
            for (size_t k = 0; k < od; ++k)
              if (prod[k]) tt.push_back({t.k * od + k, F.mul(t.c, prod[k])});
          G.set_bracket(a * od + b, c * od + d, std::move(tt));
        }
    }

  std::vector<Derivation> dgens;
  for (size_t t = 0; t < D.dim(); ++t) dgens.push_back(W.to_derivation(D.basis_vector(t)));

  // [d, s&f] = s & d(f); D basis sits above the tensor block, so store the
  // pair (tensor index, D index) with the sign flipped.
  for (size_t a = 0; a < S.algebra.dim(); ++a)
    for (size_t b = 0; b < od; ++b)
      for (size_t t = 0; t < D.dim(); ++t) {
        Vec img = apply(O, dgens[t], O.monomial(O.exponents(b)));
        std::vector<Term> tt;
        for (size_t k = 0; k < od; ++k)
          if (img[k]) tt.push_back({a * od + k, F.neg(img[k])}); // [s&f, d] = -s&d(f)
        G.set_bracket(a * od + b, tensor_dim + t, std::move(tt));
      }

  // D's own bracket, re-expressed in the D basis
  for (size_t t = 0; t < D.dim(); ++t)
    for (size_t u = t + 1; u < D.dim(); ++u) {
      Vec w = W.algebra.bracket(D.basis_vector(t), D.basis_vector(u));
      auto coords = D.coordinates(w);
      if (!coords) throw std::logic_error("graded_sum: D closure lost");
      std::vector<Term> tt;
      for (size_t k = 0; k < D.dim(); ++k)
        if ((*coords)[k]) tt.push_back({tensor_dim + k, (*coords)[k]});
      G.set_bracket(tensor_dim + t, tensor_dim + u, std::move(tt));
    }

  GradedSum out{GradedAlgebra{}, S, O, W, D, tensor_dim};
  out.g.algebra = std::move(G);
  for (size_t a = 0; a < S.algebra.dim(); ++a)
    for (size_t b = 0; b < od; ++b) out.g.degree.push_back(S.degree[a]);
  for (size_t t = 0; t < D.dim(); ++t) out.g.degree.push_back(0);

  validate_grading(out.g);
  StructureReport rep = validate_structure(out.g.algebra);
  if (!rep.ok)
    throw std::runtime_error("graded_sum: Jacobi fails on " +
                             std::to_string(rep.violations.size()) + " triples");
  return out;
}

// ------------------------------------------------- invariant ideal check

InvariantIdealReport invariant_ideal(const PolyAlgebra& O, const WittAlgebra& W,
                                     const Subspace& D) {
  std::vector<Mat> ops;
  for (uint32_t i = 0; i < O.vars(); ++i) {
    std::vector<uint32_t> e(O.vars(), 0);
    e[i] = 1;
    ops.push_back(O.mult_op(O.monomial(e)));
  }
  for (size_t t = 0; t < D.dim(); ++t)
    ops.push_back(derivation_op(O, W.to_derivation(D.basis_vector(t))));

  Subspace J = Subspace::span(O.p(), O.dim(), {O.socle()});
  for (;;) {
    std::vector<Vec> next;
    for (size_t i = 0; i < J.dim(); ++i) {
      Vec v = J.basis_vector(i);
      next.push_back(v);
      for (const Mat& op : ops) next.push_back(mat_apply(op, v));
    }
    Subspace J2 = Subspace::span(O.p(), O.dim(), next);
    if (J2 == J) break;
    J = std::move(J2);
  }
  return {J.dim() < O.dim(), J};
}

// ----------------------------------------------------------- semidirect

LieAlgebra semidirect(const LieAlgebra& L, const std::vector<Mat>& action,
                      std::vector<std::string> v_labels) {
  if (action.size() != L.dim()) throw std::invalid_argument("semidirect: one matrix per basis");
  size_t k = action.empty() ? 0 : action.front().rows;
  for (const Mat& m : action)
    if (m.rows != k || m.cols != k || m.p != L.p())
      throw std::invalid_argument("semidirect: action shape mismatch");

  // homomorphism check: action([e_i, e_j]) = [action_i, action_j]
  for (size_t i = 0; i < L.dim(); ++i)
    for (size_t j = i + 1; j < L.dim(); ++j) {
      Mat lhs(L.p(), k, k);
      for (const Term& t : L.basis_bracket(i, j)) {
        Mat scaled = action[t.k];
        for (auto& v : scaled.a) v = Fp(L.p()).mul(v, t.c);
        lhs = mat_add(lhs, scaled);
      }
      Mat rhs = mat_sub(mat_mul(action[i], action[j]), mat_mul(action[j], action[i]));
      if (!(lhs == rhs))
        throw std::invalid_argument("semidirect: action is not a Lie homomorphism");
    }

  size_t dim = L.dim() + k;
  std::vector<std::string> labels = L.labels();
  if (v_labels.empty())
    for (size_t b = 0; b < k; ++b) labels.push_back("v" + std::to_string(b));
  else {
    if (v_labels.size() != k) throw std::invalid_argument("semidirect: v label count");
    for (auto& s : v_labels) labels.push_back(std::move(s));
  }

  LieAlgebra out(L.p(), dim, labels);
  for (size_t i = 0; i < L.dim(); ++i)
    for (size_t j = i + 1; j < L.dim(); ++j) {
      std::vector<Term> terms(L.basis_bracket(i, j));
      out.set_bracket(i, j, std::move(terms));
    }
  for (size_t i = 0; i < L.dim(); ++i)
    for (size_t b = 0; b < k; ++b) {
      std::vector<Term> terms;
      for (size_t r = 0; r < k; ++r)
        if (action[i].at(r, b)) terms.push_back({L.dim() + r, action[i].at(r, b)});
      out.set_bracket(i, L.dim() + b, std::move(terms));
    }
  return out;
}

ModuleExample two_dim_nonabelian_module(uint32_t p) {
  if (p < 3) throw std::invalid_argument("two_dim_nonabelian_module: p >= 3");
  LieAlgebra L(p, 2, {"h", "e"});
  L.set_bracket(0, 1, {{1, 1}}); // [h,e] = e
  Mat H(p, p, p), E(p, p, p);
  for (uint32_t i = 0; i < p; ++i) {
    H.at(i, i) = i;                  // h v_i = i v_i
    E.at((i + 1) % p, i) = 1;        // e v_i = v_{i+1 mod p}
  }
  return {std::move(L), {std::move(H), std::move(E)}};
}

ModuleExample heisenberg_weyl_module(uint32_t p) {
  if (p < 3) throw std::invalid_argument("heisenberg_weyl_module: p >= 3");
  LieAlgebra L = heisenberg(p);
  PolyAlgebra O(p, 1);
  std::vector<uint32_t> e1{1};
  Mat A(p, p, p), B(p, p, p), Z = Mat::identity(p, p);
  // A = d/dt, B = multiplication by t on F_p[t]/(t^p)
  Derivation ddt{{O.one()}};
  A = derivation_op(O, ddt);
  B = O.mult_op(O.monomial(e1));
  return {std::move(L), {std::move(A), std::move(B), std::move(Z)}};
}

bool module_irreducible(const std::vector<Mat>& action) {
  if (action.empty()) return false;
  size_t k = action.front().rows;
  uint32_t p = action.front().p;
  for (size_t b = 0; b < k; ++b) {
    Subspace orbit = Subspace::span(p, k, {unit_vec(k, b)});
    for (;;) {
      std::vector<Vec> next;
      for (size_t i = 0; i < orbit.dim(); ++i) {
        Vec v = orbit.basis_vector(i);
        next.push_back(v);
        for (const Mat& m : action) next.push_back(mat_apply(m, v));
      }
      Subspace o2 = Subspace::span(p, k, next);
      if (o2 == orbit) break;
      orbit = std::move(o2);
    }
    if (orbit.dim() != k) return false;
  }
  return true;
}

bool module_faithful(const LieAlgebra& L, const std::vector<Mat>& action) {
  size_t k = action.empty() ? 0 : action.front().rows;
  // kernel of x -> sum x_i action_i as a k*k-row linear system
  Mat sys(L.p(), k * k, L.dim());
  for (size_t i = 0; i < L.dim(); ++i)
    for (size_t r = 0; r < k; ++r)
      for (size_t c = 0; c < k; ++c) sys.at(r * k + c, i) = action[i].at(r, c);
  return kernel_basis(sys).rows == 0;
}

// ------------------------------------------------------- named families

LieAlgebra upper_triangular(uint32_t p, size_t n) {
  // basis E_ij, i <= j, ordered row-major
  std::vector<std::pair<size_t, size_t>> pos;
  std::vector<std::string> labels;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j) {
      pos.emplace_back(i, j);
      labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  LieAlgebra L(p, pos.size(), labels);
  Fp F(p);
  for (size_t a = 0; a < pos.size(); ++a)
    for (size_t b = a + 1; b < pos.size(); ++b) {
      auto [i, j] = pos[a];
      auto [k, l] = pos[b];
      Vec acc(pos.size(), 0);
      // [E_ij, E_kl] = d_jk E_il - d_li E_kj
      if (j == k) {
        size_t t = 0;
        while (pos[t] != std::make_pair(i, l)) ++t;
        acc[t] = F.add(acc[t], 1);
      }
      if (l == i) {
        size_t t = 0;
        while (pos[t] != std::make_pair(k, j)) ++t;
        acc[t] = F.sub(acc[t], 1);
      }
      std::vector<Term> terms;
      for (size_t t = 0; t < pos.size(); ++t)
        if (acc[t]) terms.push_back({t, acc[t]});
      L.set_bracket(a, b, std::move(terms));
    }
  return L;
}

LieAlgebra strictly_upper_triangular(uint32_t p, size_t n) {
  LieAlgebra full = upper_triangular(p, n);
  // reuse the full table restricted to strictly-upper positions
  std::vector<size_t> keep;
  std::vector<std::string> labels;
  size_t idx = 0;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j) {
      if (i != j) {
        keep.push_back(idx);
        labels.push_back(full.label(idx));
      }
      ++idx;
    }
  std::vector<Vec> rows;
  for (size_t t : keep) rows.push_back(unit_vec(full.dim(), t));
  Subspace U = Subspace::span(p, full.dim(), rows);
  return restrict_to_subalgebra(full, U, labels);
}

LieAlgebra abelian_algebra(uint32_t p, size_t n) { return LieAlgebra(p, n); }

LieAlgebra heisenberg(uint32_t p) {
  LieAlgebra L(p, 3, {"A", "B", "Z"});
  L.set_bracket(0, 1, {{2, 1}}); // [A,B] = Z
  return L;
}

} // namespace nilsum
