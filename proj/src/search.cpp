#include "nilsum/search.hpp"

#include <algorithm>
#include <chrono>
#include <set>

namespace nilsum {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// (pattern, local) for a flat enumeration index
std::pair<size_t, uint64_t> locate(const std::vector<SubspaceEnumerator::Pattern>& pats,
                                   uint64_t idx) {
  size_t lo = 0, hi = pats.size();
  while (hi - lo > 1) {
    size_t mid = (lo + hi) / 2;
    if (pats[mid].first_index <= idx)
      lo = mid;
    else
      hi = mid;
  }
  return {lo, idx - pats[lo].first_index};
}

} // namespace

std::vector<Subspace> enumerate_subalgebras(const LieAlgebra& L, uint64_t budget, Exec exec) {
  SubspaceEnumerator en(L.p(), L.dim(), std::nullopt, budget);
  uint64_t total = en.total();
  const auto& pats = en.patterns();

  std::vector<uint8_t> closed = par_map<uint8_t>(static_cast<size_t>(total), exec, [&](size_t i) {
    auto [pi, local] = locate(pats, i);
    Subspace s = en.unrank(pats[pi], local);
    return static_cast<uint8_t>(is_subalgebra(L, s) ? 1 : 0);
  });

  std::vector<Subspace> out;
  for (uint64_t i = 0; i < total; ++i)
    if (closed[static_cast<size_t>(i)]) {
      auto [pi, local] = locate(pats, i);
      out.push_back(en.unrank(pats[pi], local));
    }
  return out;
}

std::vector<uint8_t> classify_nilpotent(const LieAlgebra& L, const std::vector<Subspace>& subs,
                                        Exec exec) {
  return par_map<uint8_t>(subs.size(), exec, [&](size_t i) {
    return static_cast<uint8_t>(is_nilpotent(L, subs[i]) ? 1 : 0);
  });
}

std::vector<Subspace> one_dim_ideals(const LieAlgebra& L, uint64_t budget, Exec exec) {
  uint32_t p = L.p();
  size_t n = L.dim();
  // projective representatives: leading coordinate 1 at position k,
  // free digits after it; (p^n - 1) / (p - 1) lines in total
  std::vector<uint64_t> block_first(n + 1, 0);
  uint64_t total = 0;
  std::vector<uint64_t> block_count(n, 0);
  for (size_t k = 0; k < n; ++k) {
    uint64_t cnt = 1;
    for (size_t t = k + 1; t < n; ++t) cnt *= p;
    block_first[k] = total;
    block_count[k] = cnt;
    total += cnt;
  }
  block_first[n] = total;
  if (total > budget) throw BudgetExceeded("one_dim_ideals projective scan", total, budget);

  auto unrank_line = [&](uint64_t idx) {
    size_t k = 0;
    while (block_first[k + 1] <= idx) ++k;
    uint64_t local = idx - block_first[k];
    Vec v(n, 0);
    v[k] = 1;
    for (size_t t = n; t-- > k + 1;) {
      v[t] = static_cast<uint32_t>(local % p);
      local /= p;
    }
    return v;
  };

  std::vector<uint8_t> good = par_map<uint8_t>(static_cast<size_t>(total), exec, [&](size_t i) {
    Vec v = unrank_line(static_cast<uint64_t>(i));
    size_t lead = 0;
    while (!v[lead]) ++lead;
    Fp F(p);
    for (size_t b = 0; b < n; ++b) {
      Vec w = L.bracket(unit_vec(n, b), v);
      // w must be a scalar multiple of v
      uint32_t lambda = w[lead];
      Vec expect = vec_scale(p, lambda, v);
      if (!(w == expect)) return static_cast<uint8_t>(0);
    }
    return static_cast<uint8_t>(1);
  });

  std::vector<Subspace> out;
  for (uint64_t i = 0; i < total; ++i)
    if (good[static_cast<size_t>(i)])
      out.push_back(Subspace::span(p, n, {unrank_line(i)}));
  return out;
}

bool verify_decomposition(const LieAlgebra& L, const Subspace& A, const Subspace& B) {
  if (!is_subalgebra(L, A) || !is_subalgebra(L, B)) return false;
  if (!is_nilpotent(L, A) || !is_nilpotent(L, B)) return false;
  return sum_dim(A, B) == L.dim();
}

namespace {

std::optional<std::pair<Subspace, Subspace>> canonical_witness(const LieAlgebra& L,
                                                               Subspace A, Subspace B) {
  if (!verify_decomposition(L, A, B)) return std::nullopt;
  if (B < A) std::swap(A, B);
  return std::make_pair(std::move(A), std::move(B));
}

// Cartan + commutant split: works exactly on the supersolvable families.
std::optional<std::pair<Subspace, Subspace>> try_cartan_commutant(const LieAlgebra& L,
                                                                  uint64_t seed) {
  Subspace full = Subspace::full(L.p(), L.dim());
  Subspace L2 = product_space(L, full, full);
  if (!is_subalgebra(L, L2) || !is_nilpotent(L, L2)) return std::nullopt;
  try {
    Subspace H = cartan_subalgebra(L, seed);
    if (sum_dim(H, L2) == L.dim()) return canonical_witness(L, H, L2);
  } catch (const std::runtime_error&) {
  }
  return std::nullopt;
}

// Fitting split ker((ad x)^n) + im((ad x)^n) for a pool of elements.
std::optional<std::pair<Subspace, Subspace>> try_fitting_split(const LieAlgebra& L,
                                                               uint64_t seed) {
  size_t n = L.dim();
  std::vector<Vec> pool;
  for (size_t i = 0; i < n; ++i) pool.push_back(unit_vec(n, i));
  DetRng rng(seed);
  for (int t = 0; t < 8; ++t) pool.push_back(rng.vec(L.p(), n));
  for (const Vec& x : pool) {
    if (vec_is_zero(x)) continue;
    Mat power = mat_pow(L.ad(x), n);
    Subspace H0 = Subspace::from_rref(kernel_basis(power));
    Subspace H1 = fitting_one_component(L, x);
    if (H0.dim() + H1.dim() != n) continue;
    if (!is_subalgebra(L, H0) || !is_subalgebra(L, H1)) continue;
    if (!is_nilpotent(L, H0) || !is_nilpotent(L, H1)) continue;
    if (auto w = canonical_witness(L, H0, H1)) return w;
  }
  return std::nullopt;
}

} // namespace

SearchResult search_decomposition(const LieAlgebra& L, const SearchOptions& opts) {
  auto t0 = Clock::now();
  SearchResult res;
  size_t n = L.dim();

  if (opts.fast_paths) {
    if (auto w = try_cartan_commutant(L, opts.seed)) {
      res.status = SearchStatus::decomposition_found;
      res.witness = std::move(w);
      res.stats.fast_path = "cartan_plus_commutant";
      res.stats.elapsed_ms = ms_since(t0);
      return res;
    }
    if (auto w = try_fitting_split(L, opts.seed)) {
      res.status = SearchStatus::decomposition_found;
      res.witness = std::move(w);
      res.stats.fast_path = "fitting_split";
      res.stats.elapsed_ms = ms_since(t0);
      return res;
    }
  }

  if (opts.exhaustive) {
    uint64_t required = subspace_count_all(static_cast<uint32_t>(n), L.p());
    if (required > opts.budget_subspaces) {
      res.status = SearchStatus::budget_exhausted;
      res.stats.subspaces_scanned = 0;
      res.stats.elapsed_ms = ms_since(t0);
      return res;
    }
    std::vector<Subspace> subs = enumerate_subalgebras(L, opts.budget_subspaces, opts.exec);
    res.stats.subspaces_scanned = required;
    res.stats.subalgebras_found = subs.size();
    std::vector<uint8_t> nil = classify_nilpotent(L, subs, opts.exec);
    std::vector<Subspace> cand;
    for (size_t i = 0; i < subs.size(); ++i)
      if (nil[i]) cand.push_back(subs[i]);
    res.stats.nilpotent_count = cand.size();

    // pair scan over i <= j, minimal flat index wins so the witness is the
    // same under any execution policy
    size_t m = cand.size();
    uint64_t pairs = static_cast<uint64_t>(m) * (m + 1) / 2;
    res.stats.pairs_tested = pairs;
    const long long none = std::numeric_limits<long long>::max();
    long long found = none;
    auto pair_hits = [&](long long t) {
      uint64_t tt = static_cast<uint64_t>(t);
      size_t i = 0;
      uint64_t row = m;
      while (tt >= row) {
        tt -= row;
        --row;
        ++i;
      }
      size_t j = i + static_cast<size_t>(tt);
      if (cand[i].dim() + cand[j].dim() < n) return false;
      return sum_dim(cand[i], cand[j]) == n;
    };
#ifdef _OPENMP
    const bool par = opts.exec == Exec::parallel;
#pragma omp parallel for schedule(dynamic, 256) reduction(min : found) if (par)
    for (long long t = 0; t < static_cast<long long>(pairs); ++t)
      if (pair_hits(t) && t < found) found = t;
#else
    for (long long t = 0; t < static_cast<long long>(pairs) && found == none; ++t)
      if (pair_hits(t)) found = t;
#endif
    if (found != none) {
      uint64_t tt = static_cast<uint64_t>(found);
      size_t i = 0;
      uint64_t row = m;
      while (tt >= row) {
        tt -= row;
        --row;
        ++i;
      }
      size_t j = i + static_cast<size_t>(tt);
      auto w = canonical_witness(L, cand[i], cand[j]);
      if (!w) throw std::logic_error("search: witness failed re-verification");
      res.status = SearchStatus::decomposition_found;
      res.witness = std::move(w);
    } else {
      res.status = SearchStatus::exhausted_none;
    }
    res.stats.elapsed_ms = ms_since(t0);
    return res;
  }

  // randomized: closures of random element sets, deduplicated canonically
  DetRng rng(opts.seed);
  std::set<Subspace> seen;
  std::vector<Subspace> nil;
  for (uint64_t s = 0; s < opts.randomized_budget; ++s) {
    if (opts.budget_seconds > 0 && ms_since(t0) > opts.budget_seconds * 1000.0) break;
    ++res.stats.samples_drawn;
    size_t gens = 1 + rng.below(2);
    std::vector<Vec> vs;
    for (size_t g = 0; g < gens; ++g) vs.push_back(rng.vec(L.p(), n));
    Subspace A = subalgebra_closure(L, Subspace::span(L.p(), n, vs));
    if (!seen.insert(A).second) continue;
    ++res.stats.subalgebras_found;
    if (!is_nilpotent(L, A)) continue;
    ++res.stats.nilpotent_count;
    for (const Subspace& B : nil) {
      ++res.stats.pairs_tested;
      if (A.dim() + B.dim() < n) continue;
      if (sum_dim(A, B) == n) {
        auto w = canonical_witness(L, A, B);
        if (!w) throw std::logic_error("search: witness failed re-verification");
        res.status = SearchStatus::decomposition_found;
        res.witness = std::move(w);
        res.stats.elapsed_ms = ms_since(t0);
        return res;
      }
    }
    if (A.dim() * 2 >= n && sum_dim(A, A) == n && is_nilpotent(L, A)) {
      // A alone may already span L (L nilpotent)
      if (auto w = canonical_witness(L, A, A)) {
        res.status = SearchStatus::decomposition_found;
        res.witness = std::move(w);
        res.stats.elapsed_ms = ms_since(t0);
        return res;
      }
    }
    nil.push_back(std::move(A));
  }
  res.status = SearchStatus::budget_exhausted;
  res.stats.elapsed_ms = ms_since(t0);
  return res;
}

bool all_elements_nilpotent(const WittAlgebra& W, const Subspace& D, uint64_t budget) {
  if (D.dim() == 0) return true;
  uint32_t p = W.algebra.p();
  uint64_t lines = 1; // (p^k - 1)/(p - 1), checked against the budget as it grows
  for (size_t t = 1; t < D.dim(); ++t) {
    lines = lines * p + 1;
    if (lines > budget) throw BudgetExceeded("element nilpotency scan", lines, budget);
  }
  if (lines > budget) throw BudgetExceeded("element nilpotency scan", lines, budget);
  // iterate projective representatives in D coordinates
  size_t k = D.dim();
  Vec coords(k, 0);
  for (size_t lead = 0; lead < k; ++lead) {
    uint64_t free_count = 1;
    for (size_t t = lead + 1; t < k; ++t) free_count *= p;
    for (uint64_t local = 0; local < free_count; ++local) {
      std::fill(coords.begin(), coords.end(), 0);
      coords[lead] = 1;
      uint64_t rest = local;
      for (size_t t = k; t-- > lead + 1;) {
        coords[t] = static_cast<uint32_t>(rest % p);
        rest /= p;
      }
      Vec w(W.algebra.dim(), 0);
      for (size_t t = 0; t < k; ++t)
        if (coords[t]) vec_add_scaled(p, w, coords[t], D.basis_vector(t));
      if (!is_nilpotent_derivation(W.poly, W.to_derivation(w))) return false;
    }
  }
  return true;
}

namespace {

void account(Lemma4Report& rep, size_t dim) {
  ++rep.qualifying;
  rep.qualifying_dims.push_back(dim);
  rep.max_qualifying_dim = std::max(rep.max_qualifying_dim, dim);
  if (dim >= rep.bound) rep.all_below_bound = false;
  if (dim != 1) rep.all_one_dimensional = false;
}

} // namespace

Lemma4Report lemma4_exhaustive(uint32_t p, uint32_t m, uint64_t budget, Exec exec) {
  WittAlgebra W = witt_algebra(p, m);
  Lemma4Report rep;
  rep.bound = 1;
  for (uint32_t i = 0; i < m; ++i) rep.bound *= p;

  std::vector<Subspace> subs = enumerate_subalgebras(W.algebra, budget, exec);
  rep.candidates = subs.size();

  std::vector<uint8_t> qualifies = par_map<uint8_t>(subs.size(), exec, [&](size_t i) {
    const Subspace& D = subs[i];
    if (D.dim() == 0) return static_cast<uint8_t>(0);
    if (!all_elements_nilpotent(W, D, 1u << 22)) return static_cast<uint8_t>(0);
    if (invariant_ideal(W.poly, W, D).has_proper) return static_cast<uint8_t>(0);
    return static_cast<uint8_t>(1);
  });
  for (size_t i = 0; i < subs.size(); ++i)
    if (qualifies[i]) account(rep, subs[i].dim());
  std::sort(rep.qualifying_dims.begin(), rep.qualifying_dims.end());
  return rep;
}

Lemma4Report lemma4_sample(uint32_t p, uint32_t m, uint64_t samples, uint64_t seed, Exec exec) {
  WittAlgebra W = witt_algebra(p, m);
  Lemma4Report rep;
  rep.bound = 1;
  for (uint32_t i = 0; i < m; ++i) rep.bound *= p;
  size_t n = W.algebra.dim();

  struct Sample {
    bool formed = false; // generators found and closure certified scannable
    bool kept = false;   // passed both qualification checks
    size_t dim = 0;
  };
  std::vector<Sample> drawn = par_map<Sample>(static_cast<size_t>(samples), exec, [&](size_t i) {
    DetRng rng(seed + i); // per-sample stream keeps results policy-independent
    Sample s;
    std::vector<Vec> gens;
    size_t want = 1 + rng.below(2);
    for (int tries = 0; tries < 64 && gens.size() < want; ++tries) {
      // sparse draws: dense random derivations almost never generate
      // nilpotent-element closures, sparse ones often do
      Vec w(n, 0);
      size_t terms = 1 + rng.below(3);
      for (size_t t = 0; t < terms; ++t) w[rng.below(static_cast<uint32_t>(n))] = 1 + rng.below(p - 1);
      // a constant d/dx_i component half the time: candidates inside (W_m)_0
      // always preserve the maximal ideal and get discarded later anyway
      if (rng.below(2)) w[W.basis_index(rng.below(m), 0)] = 1 + rng.below(p - 1);
      if (vec_is_zero(w)) continue;
      if (is_nilpotent_derivation(W.poly, W.to_derivation(w))) gens.push_back(w);
    }
    if (gens.size() < want) return s;
    Subspace D = subalgebra_closure(W.algebra, Subspace::span(p, n, gens));
    if (D.dim() == 0) return s;
    try {
      s.formed = true;
      if (!all_elements_nilpotent(W, D, 1u << 18)) return s;
    } catch (const BudgetExceeded&) {
      s.formed = false; // too large to certify; not counted either way
      return s;
    }
    if (invariant_ideal(W.poly, W, D).has_proper) return s;
    s.kept = true;
    s.dim = D.dim();
    return s;
  });
  for (const Sample& s : drawn) {
    if (s.formed) ++rep.candidates;
    if (s.kept) account(rep, s.dim);
  }
  std::sort(rep.qualifying_dims.begin(), rep.qualifying_dims.end());
  return rep;
}

} // namespace nilsum
