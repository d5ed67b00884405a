#pragma once

#include "nilsum/graded.hpp"

#include <map>
#include <optional>

namespace nilsum {

/// Linear map G -> G stored by basis images.
struct Cochain1 {
  uint32_t p = 2;
  size_t dim = 0;
  std::vector<Vec> values; // values[i] = phi(e_i)

  static Cochain1 zero(uint32_t p, size_t dim) {
    return {p, dim, std::vector<Vec>(dim, Vec(dim, 0))};
  }
  Vec eval(const Vec& x) const;
};

/// Alternating bilinear map G x G -> G, stored on i < j basis pairs.
struct Cochain2 {
  uint32_t p = 2;
  size_t dim = 0;
  std::vector<Vec> table; // pair_index(i, j) -> value vector

  static size_t pair_index(size_t i, size_t j) { return j * (j - 1) / 2 + i; } // i < j
  static Cochain2 zero(uint32_t p, size_t dim) {
    return {p, dim, std::vector<Vec>(dim * (dim - 1) / 2, Vec(dim, 0))};
  }

  const Vec& at(size_t i, size_t j) const { return table[pair_index(i, j)]; } // i < j
  Vec& at(size_t i, size_t j) { return table[pair_index(i, j)]; }

  /// psi(e_i, e_j) for any i != j (antisymmetry); zero vector for i == j.
  Vec eval_basis(size_t i, size_t j) const;
  Vec eval(const Vec& x, const Vec& y) const;
  bool is_zero() const;
};

/// Alternating trilinear table on i < j < k triples (coboundaries of
/// 2-cochains and star products land here).
struct Cochain3 {
  uint32_t p = 2;
  size_t dim = 0;
  std::vector<Vec> table;

  static Cochain3 zero(uint32_t p, size_t dim);
  size_t triple_index(size_t i, size_t j, size_t k) const; // i < j < k
  const Vec& at(size_t i, size_t j, size_t k) const { return table[triple_index(i, j, k)]; }
  Vec& at(size_t i, size_t j, size_t k) { return table[triple_index(i, j, k)]; }
  bool is_zero() const;
};

Cochain3 add(const Cochain3& a, const Cochain3& b);

/// d phi (x, y) = [x, phi(y)] - [y, phi(x)] - phi([x, y]).
Cochain2 coboundary1(const LieAlgebra& L, const Cochain1& phi);

/// The partner differential, with signs fixed so that the deformation
/// identity d psi_s + sum_{i+j=s} psi_i * psi_j = 0 holds verbatim:
/// d psi (x,y,z) = [psi(x,y),z] + [psi(z,x),y] + [psi(y,z),x]
///               + psi([x,y],z) + psi([z,x],y) + psi([y,z],x).
/// d (coboundary1 phi) = 0 for every phi.
Cochain3 coboundary2(const LieAlgebra& L, const Cochain2& psi);

/// phi * psi (x,y,z) = phi(psi(x,y),z) + phi(psi(z,x),y) + phi(psi(y,z),x).
Cochain3 star(const Cochain2& phi, const Cochain2& psi);

/// Graded weight of a cochain: s with psi(G_i, G_j) in G_{i+j+s}, when the
/// table is homogeneous; nullopt for zero or mixed-weight tables.
std::optional<int> cochain_weight(const GradedAlgebra& G, const Cochain2& psi);
std::optional<int> cochain_weight(const GradedAlgebra& G, const Cochain1& phi);
std::optional<int> cochain_weight(const GradedAlgebra& G, const Cochain3& psi);

/// Splits {x,y} - [x,y] by graded weight: component s maps G_i x G_j into
/// G_{i+j+s}. Both brackets must live on the same graded basis. Throws if
/// any component has weight s <= 0 (not a filtered deformation).
std::map<int, Cochain2> decompose_deformation(const LieAlgebra& deformed,
                                              const GradedAlgebra& graded);

struct MaurerCartanReport {
  std::map<int, bool> residual_zero; // per weight s
  bool all_zero = true;
  int first_failure = 0; // meaningful when !all_zero
};

/// Evaluates d psi_s + sum_{i+j=s} psi_i * psi_j for every s up to twice the
/// maximal occupied weight. Exact; a genuine bracket pair gives all zeros.
MaurerCartanReport check_maurer_cartan(const GradedAlgebra& G,
                                       const std::map<int, Cochain2>& psis);

/// Root decomposition of the algebra under ad(t), eigenvalues in GF(p).
/// Throws std::invalid_argument listing the defect when ad(t) is not
/// diagonalizable over the prime field.
std::map<uint32_t, Subspace> torus_root_spaces(const LieAlgebra& L, const Vec& t);

/// Weight components of a 2-cochain under the induced torus action:
/// component mu collects the parts mapping root spaces (a, b) into the root
/// space a + b + mu (classes mod p).
std::map<uint32_t, Cochain2> torus_weight_components(const LieAlgebra& L, const Vec& t,
                                                     const Cochain2& psi);

/// Coordinate span of 2-cochain cells; both spaces below are of this shape,
/// so the intersection is exact linear algebra on sorted cell indices.
struct CochainCellSpace {
  size_t dim = 0;         // algebra dimension (cells live in pairs x dim)
  std::vector<size_t> cells; // sorted flat indices: pair_index * dim + target
  size_t space_dim() const { return cells.size(); }
};

CochainCellSpace intersect(const CochainCellSpace& a, const CochainCellSpace& b);

/// Cells of the torus-invariant space { psi : psi(R_a, R_b) in R_{a+b} }
/// for the canonical torus with weight(v) = deg(v) mod p on the graded basis.
CochainCellSpace torus_invariant_cells(const GradedAlgebra& G);

/// Cells of the graded component C_k of weight exactly k.
CochainCellSpace graded_weight_cells(const GradedAlgebra& G, int k);

/// True iff the intersection of the torus-invariant cochain space with the
/// weight-k graded component is zero. Requires 1 <= k < p.
bool weight_vanishing_check(const GradedAlgebra& G, uint32_t k);

} // namespace nilsum
