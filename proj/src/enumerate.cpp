#include "nilsum/enumerate.hpp"

namespace nilsum {

namespace {

// counts saturate at UINT64_MAX so oversized lattices compare as
// over-budget instead of overflowing
uint64_t sat_mul(uint64_t a, uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

uint64_t sat_add(uint64_t a, uint64_t b) { return a > UINT64_MAX - b ? UINT64_MAX : a + b; }

uint64_t pow_u64(uint64_t base, uint64_t e) {
  uint64_t r = 1;
  for (uint64_t i = 0; i < e; ++i) r = sat_mul(r, base);
  return r;
}

} // namespace

uint64_t gaussian_binomial(uint32_t n, uint32_t k, uint32_t p) {
  if (k > n) return 0;
  // integer recurrence [n k] = [n-1 k-1] + p^k [n-1 k]
  std::vector<std::vector<uint64_t>> t(n + 1, std::vector<uint64_t>(k + 1, 0));
  for (uint32_t i = 0; i <= n; ++i) t[i][0] = 1;
  for (uint32_t i = 1; i <= n; ++i)
    for (uint32_t j = 1; j <= k && j <= i; ++j) {
      uint64_t right = (j <= i - 1) ? sat_mul(pow_u64(p, j), t[i - 1][j]) : 0;
      t[i][j] = sat_add(t[i - 1][j - 1], right);
    }
  return t[n][k];
}

uint64_t subspace_count_all(uint32_t n, uint32_t p) {
  uint64_t total = 0;
  for (uint32_t k = 0; k <= n; ++k) total = sat_add(total, gaussian_binomial(n, k, p));
  return total;
}

SubspaceEnumerator::SubspaceEnumerator(uint32_t p, size_t n, std::optional<size_t> dim_filter,
                                       uint64_t budget)
    : p_(p), n_(n) {
  Fp(p); // the modulus must be prime
  uint64_t required = dim_filter ? gaussian_binomial(static_cast<uint32_t>(n),
                                                     static_cast<uint32_t>(*dim_filter), p)
                                 : subspace_count_all(static_cast<uint32_t>(n), p);
  if (required > budget)
    throw BudgetExceeded("subspace enumeration", required, budget);

  size_t k_lo = dim_filter.value_or(0);
  size_t k_hi = dim_filter.value_or(n);
  uint64_t index = 0;
  for (size_t k = k_lo; k <= k_hi && k <= n; ++k) {
    // lexicographic k-combinations of {0..n-1} as pivot columns
    std::vector<size_t> comb(k);
    for (size_t i = 0; i < k; ++i) comb[i] = i;
    bool more = true;
    if (k == 0) {
      Pattern pat;
      pat.count = 1;
      pat.first_index = index++;
      patterns_.push_back(std::move(pat));
      more = false;
    }
    while (more) {
      Pattern pat;
      pat.pivots = comb;
      std::vector<bool> is_pivot(n, false);
      for (size_t c : comb) is_pivot[c] = true;
      for (size_t i = 0; i < k; ++i)
        for (size_t j = comb[i] + 1; j < n; ++j)
          if (!is_pivot[j]) pat.free_positions.push_back(i * n + j);
      pat.count = pow_u64(p, pat.free_positions.size());
      pat.first_index = index;
      index += pat.count;
      patterns_.push_back(std::move(pat));

      // next combination
      size_t i = k;
      while (i > 0) {
        --i;
        if (comb[i] != i + n - k) {
          ++comb[i];
          for (size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
          break;
        }
        if (i == 0) more = false;
      }
    }
  }
  total_ = index;
}

Subspace SubspaceEnumerator::unrank(const Pattern& pat, uint64_t local) const {
  size_t k = pat.pivots.size();
  Mat b(p_, k, n_);
  for (size_t i = 0; i < k; ++i) b.at(i, pat.pivots[i]) = 1;
  // digits of `local` base p, most significant digit on the first free slot,
  // so local order is lexicographic in the free entries
  for (size_t t = pat.free_positions.size(); t-- > 0;) {
    b.a[pat.free_positions[t]] = static_cast<uint32_t>(local % p_);
    local /= p_;
  }
  return Subspace::from_rref(std::move(b));
}

void SubspaceEnumerator::visit(const std::function<void(uint64_t, const Subspace&)>& f) const {
  for (const Pattern& pat : patterns_)
    for (uint64_t i = 0; i < pat.count; ++i) f(pat.first_index + i, unrank(pat, i));
}

} // namespace nilsum
