#pragma once

#include "nilsum/graded.hpp"
#include "nilsum/poly.hpp"

namespace nilsum {

/// C(n, k) mod p by Lucas' theorem; zero outside 0 <= k <= n.
uint32_t binom_mod(int64_t n, int64_t k, uint32_t p);

/// W_m = Der(O_m), dimension m * p^m, basis x^a d/dx_i (variable-major:
/// basis index = i * p^m + mono_index(a)).
struct WittAlgebra {
  LieAlgebra algebra;
  PolyAlgebra poly;

  size_t basis_index(uint32_t var, size_t mono) const { return var * poly.dim() + mono; }

  Derivation to_derivation(const Vec& w) const;
  Vec from_derivation(const Derivation& d) const;

  /// Zeroth term of the standard filtration: derivations whose coefficient
  /// polynomials have no constant term.
  Subspace standard_filtration_zero() const;
};

WittAlgebra witt_algebra(uint32_t p, uint32_t m, uint64_t budget = 1u << 16);

/// Zassenhaus algebra W_1(n): basis e_{-1} .. e_{p^n - 2} (index = degree + 1),
/// [e_i, e_j] = (C(i+j+1, j) - C(i+j+1, i)) e_{i+j}, graded by deg e_i = i.
/// The binomial formula is guarded: construction fails if Jacobi fails.
GradedAlgebra zassenhaus(uint32_t p, uint32_t n, uint64_t budget = 1u << 16);

/// Diagonal rescaling identifying zassenhaus(p, 1) with Der(k[x]/(x^p)):
/// e_i -> x^{i+1} d / (i+1)!. Rows are images in witt_algebra(p, 1) coordinates.
Mat zassenhaus_witt_rescaling(uint32_t p);

/// sl_2: basis e, h, f with [h,e] = 2e, [h,f] = -2f, [e,f] = h. Needs p > 2.
LieAlgebra sl2(uint32_t p);

/// S tensor O_m with [s&f, t&g] = [s,t] & fg; basis index = s_idx * p^m + mono.
LieAlgebra tensor_with_poly(const LieAlgebra& S, const PolyAlgebra& O);

/// The graded sum G = S (tensor) O_m + D for a graded simple S and a
/// bracket-closed D inside W_m. Degrees: deg(e_i & f) = i, deg(D) = 0.
struct GradedSum {
  GradedAlgebra g;    // the full algebra, grading validated
  GradedAlgebra s;    // the S factor with its grading
  PolyAlgebra om;     // O_m
  WittAlgebra wm;     // W_m acting on O_m
  Subspace d_sub;     // D in W_m coordinates
  size_t tensor_dim;  // dim S * dim O_m; D basis occupies the tail indices

  size_t index_of(size_t s_idx, size_t mono) const { return s_idx * om.dim() + mono; }

  /// Basis index of S carrying degree d (unique for the standard grading).
  size_t s_index_of_degree(int d) const;

  /// e_deg tensor f as a vector of G.
  Vec e_tensor(int deg, const Vec& f) const;

  /// D-block coordinates of a G-vector (length = dim D).
  Vec d_part(const Vec& v) const;

  /// Projection of a subspace of G onto the D block, as a subspace of F^dimD.
  Subspace project_D(const Subspace& U) const;

  /// The D-part of a G-vector as an element of W_m.
  Vec d_part_in_wm(const Vec& v) const;

  Subspace tensor_block() const;  // span of the S-tensor-O_m coordinates
  Subspace d_block() const;       // span of the D coordinates
};

GradedSum graded_sum(const GradedAlgebra& S, const PolyAlgebra& O, const WittAlgebra& W,
                     const Subspace& D);

struct InvariantIdealReport {
  bool has_proper = false;
  Subspace witness; // the minimal nonzero D-invariant ideal (socle closure)
};

/// Closure of the socle under multiplication by the generators and all
/// derivations in D. Every nonzero ideal of the local algebra O_m contains
/// the socle, so this closure is the minimal nonzero D-invariant ideal;
/// it is proper iff a proper nonzero D-invariant ideal exists.
InvariantIdealReport invariant_ideal(const PolyAlgebra& O, const WittAlgebra& W, const Subspace& D);

/// L acting on an abelian ideal V: action[i] is the matrix of basis vector i.
/// Validated to be a Lie homomorphism; throws otherwise.
LieAlgebra semidirect(const LieAlgebra& L, const std::vector<Mat>& action,
                      std::vector<std::string> v_labels = {});

struct ModuleExample {
  LieAlgebra algebra;
  std::vector<Mat> action;
};

/// 2-dim nonabelian <h, e>, [h,e] = e, acting on F_p^p by h v_i = i v_i,
/// e v_i = v_{i+1 mod p}.
ModuleExample two_dim_nonabelian_module(uint32_t p);

/// Heisenberg <A, B, Z>, [A,B] = Z, acting on F_p[t]/(t^p) by A = d/dt,
/// B = mult by t, Z = identity.
ModuleExample heisenberg_weyl_module(uint32_t p);

/// No nonzero vector spans a proper submodule, checked by orbit closure
/// from every basis vector.
bool module_irreducible(const std::vector<Mat>& action);

/// Kernel of the action map is zero.
bool module_faithful(const LieAlgebra& L, const std::vector<Mat>& action);

// small named families
LieAlgebra upper_triangular(uint32_t p, size_t n);
LieAlgebra strictly_upper_triangular(uint32_t p, size_t n);
LieAlgebra abelian_algebra(uint32_t p, size_t n);
LieAlgebra heisenberg(uint32_t p);

} // namespace nilsum
