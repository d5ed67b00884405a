#pragma once

#include "nilsum/graded.hpp"

#include <map>
#include <string>

namespace nilsum {

/// Descending filtration ... >= L_{-1} >= L_0 >= L_1 >= ... of an algebra
/// (or of a subalgebra `ambient` of it, brackets still taken in `algebra`).
/// Terms are stored for min_index..max_index; term(i) clamps to `ambient`
/// below and to zero above, so L_{min} is the filtered space and
/// L_{max+1} = 0.
struct Filtration {
  LieAlgebra algebra;
  Subspace ambient;
  std::map<int, Subspace> terms;
  int min_index = 0;
  int max_index = 0;
  std::string choice_note; // provenance of the L_{-1} choice, when one was made

  Subspace term(int i) const {
    if (i < min_index) return ambient;
    if (i > max_index) return Subspace::zero(algebra.p(), algebra.dim());
    return terms.at(i);
  }
};

/// Validates: terms descending, L_min = ambient, and [L_i, L_j] <= L_{i+j}
/// over all stored pairs (with clamping). Throws std::invalid_argument.
void validate_filtration(const Filtration& F);

/// Filtration determined by a proper subalgebra L0:
///   L_{-1} = L0 + M, M the preimage of a minimal L0-submodule of L/L0
///            (deterministic: submodule generated by the least standard
///             basis vector outside L0, minimized by dimension, ties to the
///             earliest generator);
///   L_{i+1} = { x in L_i : [x, L_{-1}] <= L_i }    for i >= 0,
///   L_{-i-1} = L_{-i} + [L_{-i}, L_{-1}]           going up,
/// both iterated to stabilization. Fails if the descending chain stabilizes
/// above zero (L0 contains an ideal) or the ascending chain stops short of L.
Filtration weisfeiler_filtration(const LieAlgebra& L, const Subspace& L0);

/// Associated graded algebra with its coset-representative bookkeeping.
/// Representatives are canonical: basis of L_i reduced mod L_{i+1}, then
/// re-echelonized, so gr outputs are comparable across runs.
struct GradedOfFiltration {
  GradedAlgebra graded;
  Mat reps; // row r = representative of gr basis vector r, ambient coordinates
  std::map<int, std::pair<size_t, size_t>> blocks; // degree -> [begin, end) rows

  size_t dim() const { return graded.algebra.dim(); }
};

GradedOfFiltration associated_graded(const Filtration& F);

/// B_i = B intersect L_i on the same index range; B must be a subalgebra.
Filtration induced_filtration(const Subspace& B, const Filtration& F);

/// Degreewise maps gr B -> gr L, x + B_{i+1} |-> x + L_{i+1}.
struct GradedEmbedding {
  GradedOfFiltration source; // gr B
  GradedOfFiltration target; // gr L
  std::map<int, Mat> maps;   // degree -> (dim grB_d) x (dim grL_d)
  bool injective = false;
  bool bracket_preserving = false;
};

GradedEmbedding gr_embed(const Subspace& B, const Filtration& F);

} // namespace nilsum
