#pragma once

#include "nilsum/subspace.hpp"

#include <functional>
#include <optional>

namespace nilsum {

/// Gaussian binomial [n choose k]_p: the number of k-dimensional subspaces
/// of GF(p)^n. Throws std::overflow_error if the value exceeds uint64.
uint64_t gaussian_binomial(uint32_t n, uint32_t k, uint32_t p);

/// Number of subspaces of GF(p)^n of every dimension.
uint64_t subspace_count_all(uint32_t n, uint32_t p);

/// Exhaustive enumeration of the subspace lattice of GF(p)^n in a fixed
/// canonical order: dimension ascending, then pivot pattern (lexicographic
/// pivot-column combinations), then free entries lexicographically. Every
/// subspace is produced exactly once, directly in RREF form.
///
/// The enumeration is partitioned into pivot-pattern work units so scans can
/// be split across workers without coordination; unrank(pattern, i) is pure.
class SubspaceEnumerator {
public:
  struct Pattern {
    std::vector<size_t> pivots;          // pivot column indices, ascending
    std::vector<size_t> free_positions;  // (row, col) flattened row-major
    uint64_t count = 1;                  // p^(#free)
    uint64_t first_index = 0;            // global index of local 0
  };

  /// dim_filter: restrict to subspaces of that dimension; nullopt = all dims.
  /// Throws BudgetExceeded before iteration if the total count exceeds budget.
  SubspaceEnumerator(uint32_t p, size_t n, std::optional<size_t> dim_filter, uint64_t budget);

  uint64_t total() const { return total_; }
  size_t ambient_dim() const { return n_; }
  uint32_t p() const { return p_; }
  const std::vector<Pattern>& patterns() const { return patterns_; }

  /// Subspace for a (pattern, local index) pair; local < pattern.count.
  Subspace unrank(const Pattern& pat, uint64_t local) const;

  /// Serial visit in canonical order.
  void visit(const std::function<void(uint64_t, const Subspace&)>& f) const;

private:
  uint32_t p_;
  size_t n_;
  uint64_t total_ = 0;
  std::vector<Pattern> patterns_;
};

} // namespace nilsum
