#pragma once

#include "nilsum/lie.hpp"

#include <map>

namespace nilsum {

/// Lie algebra with a degree on each basis vector. Components are the
/// coordinate spans per degree; bracket compatibility [G_i, G_j] in G_{i+j}
/// is a checkable property, not a construction guarantee.
struct GradedAlgebra {
  LieAlgebra algebra;
  std::vector<int> degree; // per basis index

  const std::map<int, Subspace>& components() const;

  Subspace component(int d) const {
    auto& c = components();
    auto it = c.find(d);
    return it == c.end() ? Subspace::zero(algebra.p(), algebra.dim()) : it->second;
  }

  std::vector<int> occupied_degrees() const;

  int min_degree() const;
  int max_degree() const;

private:
  mutable std::map<int, Subspace> components_; // cached axis spans
};

/// True iff every basis product lands in the component of the summed degree
/// (degrees outside the occupied range count as the zero component).
bool grading_compatible(const GradedAlgebra& G);

/// Throws std::invalid_argument when the grading is incompatible.
void validate_grading(const GradedAlgebra& G);

} // namespace nilsum
