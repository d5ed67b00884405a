#pragma once

#include "nilsum/subspace.hpp"

#include <array>
#include <random>
#include <string>
#include <vector>

namespace nilsum {

/// One term of a structure-constant expansion: coefficient c on basis k.
struct Term {
  size_t k;
  uint32_t c;
  bool operator==(const Term&) const = default;
};

/// Finite-dimensional Lie algebra over GF(p) given by structure constants.
/// Products are stored sparsely for i < j only; [e_j, e_i] is the negation
/// and [e_i, e_i] = 0, so antisymmetry holds by construction. The Jacobi
/// identity is NOT implied by construction: run validate_structure.
class LieAlgebra {
public:
  LieAlgebra() = default;
  LieAlgebra(uint32_t p, size_t dim, std::vector<std::string> labels = {});

  uint32_t p() const { return p_; }
  size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(size_t i) const { return labels_[i]; }
  void set_label(size_t i, std::string s) { labels_[i] = std::move(s); }

  /// Define [e_i, e_j] for i < j. Coefficients are reduced mod p; zero terms
  /// are dropped; terms are kept sorted by basis index.
  void set_bracket(size_t i, size_t j, std::vector<Term> terms);

  /// Terms of [e_i, e_j] for i < j (empty if the product is zero).
  const std::vector<Term>& basis_bracket(size_t i, size_t j) const;

  /// out += c * [e_i, e_j], any i, j.
  void accumulate_basis_bracket(size_t i, size_t j, uint32_t c, Vec& out) const;

  Vec bracket(const Vec& x, const Vec& y) const;

  /// [x, e_k]; cheaper than bracket() against a unit vector.
  Vec bracket_with_basis(const Vec& x, size_t k) const;

  /// Matrix of ad(x): y -> [x, y], acting on column vectors.
  Mat ad(const Vec& x) const;

  /// Non-trivially stored products, as (i, j) with i < j.
  std::vector<std::pair<size_t, size_t>> nonzero_pairs() const;

private:
  uint32_t p_ = 2;
  size_t dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::vector<Term>> sc_; // indexed by pair_index(i, j), i < j

  size_t pair_index(size_t i, size_t j) const { return j * (j - 1) / 2 + i; }
  static const std::vector<Term> empty_terms_;
};

struct StructureReport {
  bool ok = true;
  std::vector<std::array<size_t, 3>> violations; // Jacobi-violating basis triples
};

/// Checks the Jacobi identity on all basis triples ([x,x] = 0 holds by
/// representation). The report carries every violating triple.
StructureReport validate_structure(const LieAlgebra& L);

/// Span of all [u, v] over basis pairs of U and V.
Subspace product_space(const LieAlgebra& L, const Subspace& U, const Subspace& V);

bool is_subalgebra(const LieAlgebra& L, const Subspace& U);

/// Smallest bracket-closed subspace containing S.
Subspace subalgebra_closure(const LieAlgebra& L, const Subspace& S);

struct SeriesReport {
  std::vector<Subspace> chain; // strictly decreasing, first entry is U
  bool stabilized = false;
  size_t steps = 0;
  bool reached_zero() const { return !chain.empty() && chain.back().is_zero(); }
};

/// U^(k+1) = [U^(k), U^(k)]. U must be bracket-closed.
SeriesReport derived_series(const LieAlgebra& L, const Subspace& U);

/// U^{k+1} = [U, U^k]. U must be bracket-closed.
SeriesReport lower_central_series(const LieAlgebra& L, const Subspace& U);

/// Both predicates concern U's own bracket (intrinsic series of U).
bool is_solvable(const LieAlgebra& L, const Subspace& U);
bool is_nilpotent(const LieAlgebra& L, const Subspace& U);
bool is_solvable(const LieAlgebra& L);
bool is_nilpotent(const LieAlgebra& L);

/// {x : [x, u] = 0 for all u in U}.
Subspace centralizer(const LieAlgebra& L, const Subspace& U);
Subspace center(const LieAlgebra& L);

/// {x : [x, U] contained in U}.
Subspace normalizer(const LieAlgebra& L, const Subspace& U);

bool is_ad_nilpotent(const LieAlgebra& L, const Vec& x);

/// y -> [y, x] applied `times` times.
Vec repeated_bracket_with(const LieAlgebra& L, Vec y, const Vec& x, size_t times);

/// Fitting null component ker((ad x)^dim) for seeded pseudo-random x,
/// retried until nilpotent and self-normalizing. Deterministic given seed.
/// Throws std::runtime_error when the retry budget is exhausted.
Subspace cartan_subalgebra(const LieAlgebra& L, uint64_t seed, int retry_budget = 64);

/// Fitting one component im((ad x)^dim) of a single element.
Subspace fitting_one_component(const LieAlgebra& L, const Vec& x);

/// The same algebra expressed on a new basis; rows of `new_basis` are the
/// new basis vectors in old coordinates and must be invertible.
LieAlgebra change_basis(const LieAlgebra& L, const Mat& new_basis);

/// U's own bracket as a standalone algebra on U's canonical basis.
/// Throws if U is not bracket-closed.
LieAlgebra restrict_to_subalgebra(const LieAlgebra& L, const Subspace& U,
                                  std::vector<std::string> labels = {});

/// Seeded uniform values without std::uniform_int_distribution, whose output
/// is implementation-defined; mt19937_64 itself is pinned by the standard.
class DetRng {
public:
  explicit DetRng(uint64_t seed) : eng_(seed) {}
  uint32_t below(uint32_t bound) {
    // rejection sampling keeps the draw unbiased
    uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t r;
    do {
      r = eng_();
    } while (r >= limit);
    return static_cast<uint32_t>(r % bound);
  }
  Vec vec(uint32_t p, size_t n) {
    Vec v(n);
    for (auto& x : v) x = below(p);
    return v;
  }
  uint64_t raw() { return eng_(); }

private:
  std::mt19937_64 eng_;
};

} // namespace nilsum
