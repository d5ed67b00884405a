#include "nilsum/lie.hpp"

#include <algorithm>

namespace nilsum {

const std::vector<Term> LieAlgebra::empty_terms_{};

LieAlgebra::LieAlgebra(uint32_t p, size_t dim, std::vector<std::string> labels)
    : p_(p), dim_(dim), labels_(std::move(labels)), sc_(dim * (dim - 1) / 2) {
  Fp(p); // the modulus must be prime
  if (labels_.empty()) {
    labels_.reserve(dim);
    for (size_t i = 0; i < dim; ++i) labels_.push_back("e" + std::to_string(i));
  }
  if (labels_.size() != dim) throw std::invalid_argument("LieAlgebra: label count mismatch");
}

void LieAlgebra::set_bracket(size_t i, size_t j, std::vector<Term> terms) {
  if (i >= j || j >= dim_) throw std::invalid_argument("set_bracket: need i < j < dim");
  std::vector<Term> cleaned;
  for (Term t : terms) {
    t.c %= p_;
    if (t.c) cleaned.push_back(t);
  }
  std::sort(cleaned.begin(), cleaned.end(), [](const Term& a, const Term& b) { return a.k < b.k; });
  sc_[pair_index(i, j)] = std::move(cleaned);
}

const std::vector<Term>& LieAlgebra::basis_bracket(size_t i, size_t j) const {
  if (i >= j) throw std::invalid_argument("basis_bracket: need i < j");
  return sc_[pair_index(i, j)];
}

void LieAlgebra::accumulate_basis_bracket(size_t i, size_t j, uint32_t c, Vec& out) const {
  if (i == j || c == 0) return;
  uint32_t coeff = c;
  if (i > j) {
    std::swap(i, j);
    coeff = Fp(p_).neg(coeff % p_);
  }
  for (const Term& t : sc_[pair_index(i, j)])
    out[t.k] = static_cast<uint32_t>((out[t.k] + static_cast<uint64_t>(coeff) * t.c) % p_);
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw std::invalid_argument("bracket: dimension mismatch");
  Fp F(p_);
  Vec out(dim_, 0);
  for (size_t j = 1; j < dim_; ++j) {
    if (x[j] == 0 && y[j] == 0) continue;
    for (size_t i = 0; i < j; ++i) {
      // coefficient of [e_i, e_j] in [x, y]
      uint32_t c = F.sub(F.mul(x[i], y[j]), F.mul(x[j], y[i]));
      if (!c) continue;
      for (const Term& t : sc_[pair_index(i, j)])
        out[t.k] = static_cast<uint32_t>((out[t.k] + static_cast<uint64_t>(c) * t.c) % p_);
    }
  }
  return out;
}

Vec LieAlgebra::bracket_with_basis(const Vec& x, size_t k) const {
  Vec out(dim_, 0);
  for (size_t i = 0; i < dim_; ++i)
    if (x[i]) accumulate_basis_bracket(i, k, x[i], out);
  return out;
}

Mat LieAlgebra::ad(const Vec& x) const {
  if (x.size() != dim_) throw std::invalid_argument("ad: dimension mismatch");
  Fp F(p_);
  Mat m(p_, dim_, dim_);
  for (size_t j = 1; j < dim_; ++j)
    for (size_t i = 0; i < j; ++i) {
      const auto& terms = sc_[pair_index(i, j)];
      if (terms.empty()) continue;
      // column j receives x_i * [e_i, e_j]; column i receives -x_j * [e_i, e_j]
      if (x[i])
        for (const Term& t : terms) m.at(t.k, j) = F.add(m.at(t.k, j), F.mul(x[i], t.c));
      if (x[j])
        for (const Term& t : terms) m.at(t.k, i) = F.sub(m.at(t.k, i), F.mul(x[j], t.c));
    }
  return m;
}

std::vector<std::pair<size_t, size_t>> LieAlgebra::nonzero_pairs() const {
  std::vector<std::pair<size_t, size_t>> out;
  for (size_t j = 1; j < dim_; ++j)
    for (size_t i = 0; i < j; ++i)
      if (!sc_[pair_index(i, j)].empty()) out.emplace_back(i, j);
  return out;
}

StructureReport validate_structure(const LieAlgebra& L) {
  StructureReport rep;
  size_t n = L.dim();
  Vec acc(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      for (size_t k = j + 1; k < n; ++k) {
        std::fill(acc.begin(), acc.end(), 0);
        // [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
        for (const Term& t : L.basis_bracket(i, j)) L.accumulate_basis_bracket(t.k, k, t.c, acc);
        for (const Term& t : L.basis_bracket(j, k)) L.accumulate_basis_bracket(t.k, i, t.c, acc);
        for (const Term& t : L.basis_bracket(i, k)) {
          // [e_k, e_i] = -[e_i, e_k]
          L.accumulate_basis_bracket(t.k, j, Fp(L.p()).neg(t.c), acc);
        }
        if (!vec_is_zero(acc)) {
          rep.ok = false;
          rep.violations.push_back({i, j, k});
        }
      }
  return rep;
}

Subspace product_space(const LieAlgebra& L, const Subspace& U, const Subspace& V) {
  std::vector<Vec> rows;
  rows.reserve(U.dim() * V.dim());
  for (size_t a = 0; a < U.dim(); ++a)
    for (size_t b = 0; b < V.dim(); ++b)
      rows.push_back(L.bracket(U.basis_vector(a), V.basis_vector(b)));
  return Subspace::span(L.p(), L.dim(), rows);
}

bool is_subalgebra(const LieAlgebra& L, const Subspace& U) {
  for (size_t a = 0; a < U.dim(); ++a)
    for (size_t b = a + 1; b < U.dim(); ++b)
      if (!U.contains(L.bracket(U.basis_vector(a), U.basis_vector(b)))) return false;
  return true;
}

Subspace subalgebra_closure(const LieAlgebra& L, const Subspace& S) {
  Subspace cur = S;
  for (size_t guard = 0; guard <= L.dim() + 1; ++guard) {
    if (is_subalgebra(L, cur)) return cur;
    cur = sum(cur, product_space(L, cur, cur));
  }
  return cur; // unreachable: dimension strictly grows until closed
}

namespace {

SeriesReport run_series(const LieAlgebra& L, const Subspace& U, bool derived) {
  if (!is_subalgebra(L, U))
    throw std::invalid_argument("series: subspace is not bracket-closed");
  SeriesReport rep;
  rep.chain.push_back(U);
  // any strictly decreasing chain stabilizes within dim steps; +1 for the check
  for (size_t step = 0; step <= L.dim() + 1; ++step) {
    const Subspace& last = rep.chain.back();
    Subspace next = derived ? product_space(L, last, last) : product_space(L, U, last);
    if (next == last) {
      rep.stabilized = true;
      break;
    }
    rep.chain.push_back(std::move(next));
  }
  rep.steps = rep.chain.size() - 1;
  return rep;
}

} // namespace

SeriesReport derived_series(const LieAlgebra& L, const Subspace& U) { return run_series(L, U, true); }

SeriesReport lower_central_series(const LieAlgebra& L, const Subspace& U) {
  return run_series(L, U, false);
}

bool is_solvable(const LieAlgebra& L, const Subspace& U) {
  return derived_series(L, U).reached_zero();
}

bool is_nilpotent(const LieAlgebra& L, const Subspace& U) {
  return lower_central_series(L, U).reached_zero();
}

bool is_solvable(const LieAlgebra& L) { return is_solvable(L, Subspace::full(L.p(), L.dim())); }
bool is_nilpotent(const LieAlgebra& L) { return is_nilpotent(L, Subspace::full(L.p(), L.dim())); }

Subspace centralizer(const LieAlgebra& L, const Subspace& U) {
  if (U.dim() == 0) return Subspace::full(L.p(), L.dim());
  // [x, u] = 0 for all u in a basis of U, i.e. ad(u) x = 0 stacked.
  Mat stacked(L.p(), U.dim() * L.dim(), L.dim());
  for (size_t r = 0; r < U.dim(); ++r) {
    Mat adu = L.ad(U.basis_vector(r));
    for (size_t i = 0; i < L.dim(); ++i)
      for (size_t j = 0; j < L.dim(); ++j) stacked.at(r * L.dim() + i, j) = adu.at(i, j);
  }
  return Subspace::from_rref(kernel_basis(stacked));
}

Subspace center(const LieAlgebra& L) { return centralizer(L, Subspace::full(L.p(), L.dim())); }

Subspace normalizer(const LieAlgebra& L, const Subspace& U) {
  if (U.dim() == 0) return Subspace::full(L.p(), L.dim());
  // reduction mod U as a matrix, applied to each [x, u_r]
  size_t n = L.dim();
  Mat red(L.p(), n, n);
  for (size_t j = 0; j < n; ++j) {
    Vec r = U.reduce(unit_vec(n, j));
    for (size_t i = 0; i < n; ++i) red.at(i, j) = r[i];
  }
  Mat stacked(L.p(), U.dim() * n, n);
  for (size_t r = 0; r < U.dim(); ++r) {
    Mat cond = mat_mul(red, L.ad(U.basis_vector(r)));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) stacked.at(r * n + i, j) = cond.at(i, j);
  }
  return Subspace::from_rref(kernel_basis(stacked));
}

bool is_ad_nilpotent(const LieAlgebra& L, const Vec& x) {
  return mat_pow(L.ad(x), L.dim()).is_zero();
}

Vec repeated_bracket_with(const LieAlgebra& L, Vec y, const Vec& x, size_t times) {
  for (size_t i = 0; i < times; ++i) y = L.bracket(y, x);
  return y;
}

Subspace fitting_one_component(const LieAlgebra& L, const Vec& x) {
  Mat power = mat_pow(L.ad(x), L.dim());
  return Subspace::span(transpose(power)); // column space
}

Subspace cartan_subalgebra(const LieAlgebra& L, uint64_t seed, int retry_budget) {
  DetRng rng(seed);
  for (int attempt = 0; attempt < retry_budget; ++attempt) {
    Vec x = rng.vec(L.p(), L.dim());
    if (vec_is_zero(x)) continue;
    Mat power = mat_pow(L.ad(x), L.dim());
    Subspace H = Subspace::from_rref(kernel_basis(power));
    if (!is_subalgebra(L, H)) continue;
    if (!is_nilpotent(L, H)) continue;
    if (!(normalizer(L, H) == H)) continue;
    return H;
  }
  throw std::runtime_error("cartan_subalgebra: retry budget exhausted");
}

LieAlgebra change_basis(const LieAlgebra& L, const Mat& new_basis) {
  if (new_basis.rows != L.dim() || new_basis.cols != L.dim())
    throw std::invalid_argument("change_basis: square basis matrix required");
  Mat inv = invert(new_basis);
  LieAlgebra out(L.p(), L.dim());
  for (size_t j = 1; j < L.dim(); ++j)
    for (size_t i = 0; i < j; ++i) {
      Vec w = L.bracket(new_basis.row_vec(i), new_basis.row_vec(j));
      // coordinates in the new basis: c = w * inv (row vector times matrix)
      Vec c(L.dim(), 0);
      for (size_t k = 0; k < L.dim(); ++k) {
        if (!w[k]) continue;
        for (size_t l = 0; l < L.dim(); ++l)
          c[l] = static_cast<uint32_t>((c[l] + static_cast<uint64_t>(w[k]) * inv.at(k, l)) % L.p());
      }
      std::vector<Term> terms;
      for (size_t k = 0; k < L.dim(); ++k)
        if (c[k]) terms.push_back({k, c[k]});
      out.set_bracket(i, j, std::move(terms));
    }
  return out;
}

LieAlgebra restrict_to_subalgebra(const LieAlgebra& L, const Subspace& U,
                                  std::vector<std::string> labels) {
  LieAlgebra out(L.p(), U.dim(), std::move(labels));
  for (size_t j = 1; j < U.dim(); ++j)
    for (size_t i = 0; i < j; ++i) {
      Vec w = L.bracket(U.basis_vector(i), U.basis_vector(j));
      auto coords = U.coordinates(w);
      if (!coords) throw std::invalid_argument("restrict_to_subalgebra: not bracket-closed");
      std::vector<Term> terms;
      for (size_t k = 0; k < U.dim(); ++k)
        if ((*coords)[k]) terms.push_back({k, (*coords)[k]});
      out.set_bracket(i, j, std::move(terms));
    }
  return out;
}

} // namespace nilsum
