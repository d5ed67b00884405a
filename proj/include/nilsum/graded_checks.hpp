#pragma once

#include "nilsum/constructions.hpp"
#include "nilsum/search.hpp"

namespace nilsum {

/// Conclusions checked for a candidate subalgebra N of a graded sum G:
/// (i) homogeneous and nilpotent, (ii) full degree -1 component,
/// (iii) projection onto D surjective.
struct Lemma2Report {
  bool subalgebra = false;
  bool homogeneous = false;
  bool nilpotent = false;
  bool degree_minus1_full = false;
  bool prD_surjective = false;
  bool all() const {
    return subalgebra && homogeneous && nilpotent && degree_minus1_full && prD_surjective;
  }
};

Lemma2Report check_lemma2(const GradedSum& G, const Subspace& N);

struct Lemma3Report {
  bool preconditions_met = false; // the Lemma2Report conclusions
  bool F_zero = false;            // F = { f : e_0 & f in N } = 0
  bool N0_iso_D = false;          // e_0 & f + d  |->  d bijective on N_0
  bool containment = false;       // N inside <e_{-1}, e_0> & O_m + D
  bool D_nilpotent = false;       // D acts by nilpotent derivations of O_m
  Subspace F;                     // the computed F, as a subspace of O_m
  /// When F contains f with nonzero constant term: the p-fold bracket
  /// [..[e_{-1} & 1, e_0 & f] .. , e_0 & f] = e_{-1} & f^p, in G coordinates.
  std::optional<Vec> non_nilpotency_witness;
  std::optional<Vec> witness_f; // that f, as an element of O_m
};

Lemma3Report check_lemma3(const GradedSum& G, const Subspace& N,
                          uint64_t element_budget = 1u << 20);

struct DimensionAudit {
  size_t dim_B = 0;
  uint64_t pm = 0;      // p^m
  size_t dim_D = 0;
  uint64_t bound = 0;   // p^m + dim D
  bool theorem_inequality = false; // dim B <= p^m + dim D
  size_t dim_L = 0;
  bool counterexample_inequality = false; // dim L <= 2 dim B
  int64_t forced_dimD_lower = 0; // ceil((dim L - 2 p^m) / 2) if the above held
  bool forces_dimD_ge_pm = false;
};

DimensionAudit dimension_audit(const GradedSum& G, const Subspace& B);

} // namespace nilsum
