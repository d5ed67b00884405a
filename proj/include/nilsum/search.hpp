#pragma once

#include "nilsum/constructions.hpp"
#include "nilsum/enumerate.hpp"

#include <optional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nilsum {

/// Execution policy for the scan kernels. Results are identical under both:
/// the parallel paths write into preallocated index slots or reduce to the
/// canonical minimum, never append in completion order. The serial path is
/// the reference implementation the parallel one is tested against.
enum class Exec { serial, parallel };

/// All bracket-closed subspaces of GF(p)^dim under the bracket of L, in
/// canonical enumeration order. Budget counts raw subspaces scanned.
std::vector<Subspace> enumerate_subalgebras(const LieAlgebra& L, uint64_t budget, Exec exec);

/// Flags[i] = is_nilpotent(L, subs[i]), evaluated independently per entry.
std::vector<uint8_t> classify_nilpotent(const LieAlgebra& L, const std::vector<Subspace>& subs,
                                        Exec exec);

/// All lines <v> with [L, v] contained in <v>, by projective scan.
std::vector<Subspace> one_dim_ideals(const LieAlgebra& L, uint64_t budget, Exec exec);

enum class SearchStatus { decomposition_found, exhausted_none, budget_exhausted };

struct SearchStats {
  uint64_t subspaces_scanned = 0;
  uint64_t subalgebras_found = 0;
  uint64_t nilpotent_count = 0;
  uint64_t pairs_tested = 0;
  uint64_t samples_drawn = 0;
  std::string fast_path; // empty when the scan did the work
  double elapsed_ms = 0;
};

struct SearchResult {
  SearchStatus status = SearchStatus::budget_exhausted;
  std::optional<std::pair<Subspace, Subspace>> witness; // canonical order: A <= B
  SearchStats stats;
};

struct SearchOptions {
  bool exhaustive = true;
  uint64_t budget_subspaces = 2'000'000;
  uint64_t randomized_budget = 2000; // closure samples in randomized mode
  double budget_seconds = 0;         // 0 = no wall-clock cap (randomized sampling only)
  uint64_t seed = 1;
  bool fast_paths = true;
  Exec exec = Exec::parallel;
};

/// Decomposition L = A + B into two nilpotent subalgebras (vector-space sum;
/// the intersection may be nonzero). Fast paths try the Cartan + commutant
/// split and single-element Fitting splits first; exhaustive mode then scans
/// every subalgebra pair, randomized mode samples closures of random element
/// sets. Every emitted witness is re-verified independently of the path that
/// found it.
SearchResult search_decomposition(const LieAlgebra& L, const SearchOptions& opts);

/// True iff A, B are bracket-closed, nilpotent, and A + B = L.
bool verify_decomposition(const LieAlgebra& L, const Subspace& A, const Subspace& B);

/// Scan a subalgebra of W_m for non-nilpotent elements (projective scan of
/// the derivation lines). Returns false as soon as one fails.
bool all_elements_nilpotent(const WittAlgebra& W, const Subspace& D, uint64_t budget);

struct Lemma4Report {
  uint64_t candidates = 0;   // subalgebras scanned (exhaustive) or samples kept
  uint64_t qualifying = 0;   // nilpotent-element, invariant-ideal-free
  uint64_t bound = 0;        // p^m
  size_t max_qualifying_dim = 0;
  bool all_below_bound = true;
  bool all_one_dimensional = true; // the m = 1 anchor
  std::vector<size_t> qualifying_dims; // multiset, ascending
};

/// Exhaustive scan of every subalgebra of W_m.
Lemma4Report lemma4_exhaustive(uint32_t p, uint32_t m, uint64_t budget, Exec exec);

/// Seeded sampling: closures of random nilpotent derivations, discarding
/// candidates with non-nilpotent elements or invariant ideals. Sample i uses
/// seed + i, so results do not depend on the execution policy.
Lemma4Report lemma4_sample(uint32_t p, uint32_t m, uint64_t samples, uint64_t seed, Exec exec);

/// Shared parallel-map helper: f(i) for i in [0, n), results in index order.
template <class T, class F>
std::vector<T> par_map(size_t n, Exec exec, F&& f) {
  std::vector<T> out(n);
#ifdef _OPENMP
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
      out[static_cast<size_t>(i)] = f(static_cast<size_t>(i));
    return out;
  }
#endif
  for (size_t i = 0; i < n; ++i) out[i] = f(i);
  return out;
}

} // namespace nilsum
