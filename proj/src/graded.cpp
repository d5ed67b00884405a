#include "nilsum/graded.hpp"

#include <algorithm>

namespace nilsum {

const std::map<int, Subspace>& GradedAlgebra::components() const {
  if (components_.empty() && !degree.empty()) {
    std::map<int, std::vector<Vec>> rows;
    for (size_t i = 0; i < degree.size(); ++i)
      rows[degree[i]].push_back(unit_vec(algebra.dim(), i));
    for (auto& [d, r] : rows)
      components_.emplace(d, Subspace::span(algebra.p(), algebra.dim(), r));
  }
  return components_;
}

std::vector<int> GradedAlgebra::occupied_degrees() const {
  std::vector<int> ds;
  for (const auto& [d, s] : components()) ds.push_back(d);
  return ds;
}

int GradedAlgebra::min_degree() const {
  return *std::min_element(degree.begin(), degree.end());
}

int GradedAlgebra::max_degree() const {
  return *std::max_element(degree.begin(), degree.end());
}

bool grading_compatible(const GradedAlgebra& G) {
  size_t n = G.algebra.dim();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      int target = G.degree[i] + G.degree[j];
      for (const Term& t : G.algebra.basis_bracket(i, j))
        if (G.degree[t.k] != target) return false;
    }
  return true;
}

void validate_grading(const GradedAlgebra& G) {
  if (G.degree.size() != G.algebra.dim())
    throw std::invalid_argument("grading: degree map size mismatch");
  if (!grading_compatible(G))
    throw std::invalid_argument("grading: bracket is not degree-additive");
}

} // namespace nilsum
