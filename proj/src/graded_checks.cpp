#include "nilsum/graded_checks.hpp"

namespace nilsum {

Lemma2Report check_lemma2(const GradedSum& G, const Subspace& N) {
  Lemma2Report rep;
  const LieAlgebra& A = G.g.algebra;
  rep.subalgebra = is_subalgebra(A, N);

  // homogeneous: N is the sum of its intersections with the components
  Subspace homog = Subspace::zero(A.p(), A.dim());
  for (const auto& [d, comp] : G.g.components()) homog = sum(homog, intersect(N, comp));
  rep.homogeneous = homog == N;

  rep.nilpotent = rep.subalgebra && is_nilpotent(A, N);

  Subspace gm1 = G.g.component(-1);
  rep.degree_minus1_full = intersect(N, gm1) == gm1;

  rep.prD_surjective = G.project_D(N).dim() == G.d_sub.dim();
  return rep;
}

Lemma3Report check_lemma3(const GradedSum& G, const Subspace& N, uint64_t element_budget) {
  Lemma3Report rep;
  const LieAlgebra& A = G.g.algebra;
  uint32_t p = A.p();
  Lemma2Report pre = check_lemma2(G, N);
  rep.preconditions_met = pre.all();

  // F = { f in O_m : e_0 & f in N }, the kernel of f -> (e_0 & f mod N)
  {
    Mat cond(p, A.dim(), G.om.dim());
    for (size_t b = 0; b < G.om.dim(); ++b) {
      Vec img = N.reduce(G.e_tensor(0, G.om.monomial(G.om.exponents(b))));
      for (size_t i = 0; i < A.dim(); ++i) cond.at(i, b) = img[i];
    }
    rep.F = Subspace::from_rref(kernel_basis(cond));
    rep.F_zero = rep.F.is_zero();
  }

  // the map e_0 & f + d -> d on N_0 = N intersect G_0, onto D
  {
    Subspace N0 = intersect(N, G.g.component(0));
    bool onto = G.project_D(N0).dim() == G.d_sub.dim();
    bool into = intersect(N0, G.tensor_block()).is_zero(); // kernel = e_0 & F
    rep.N0_iso_D = onto && into;
  }

  // N inside <e_{-1}, e_0> & O_m + D
  {
    std::vector<Vec> rows;
    for (int d : {-1, 0}) {
      size_t si = G.s_index_of_degree(d);
      for (size_t b = 0; b < G.om.dim(); ++b)
        rows.push_back(unit_vec(A.dim(), G.index_of(si, b)));
    }
    for (size_t t = G.tensor_dim; t < A.dim(); ++t) rows.push_back(unit_vec(A.dim(), t));
    Subspace low = Subspace::span(p, A.dim(), rows);
    rep.containment = low.contains(N);
  }

  rep.D_nilpotent = all_elements_nilpotent(G.wm, G.d_sub, element_budget);

  // the classical obstruction: f in F with a nonzero constant term makes
  // ad(e_0 & f) act invertibly on e_{-1} & O_m
  if (!rep.F_zero) {
    std::optional<Vec> f;
    for (size_t r = 0; r < rep.F.dim(); ++r)
      if (G.om.constant_term(rep.F.basis_vector(r)) != 0) {
        f = rep.F.basis_vector(r);
        break;
      }
    if (f) {
      rep.witness_f = f;
      Vec start = G.e_tensor(-1, G.om.one());
      Vec x = G.e_tensor(0, *f);
      rep.non_nilpotency_witness = repeated_bracket_with(A, start, x, p);
    }
  }
  return rep;
}

DimensionAudit dimension_audit(const GradedSum& G, const Subspace& B) {
  DimensionAudit a;
  a.dim_B = B.dim();
  a.pm = G.om.dim();
  a.dim_D = G.d_sub.dim();
  a.bound = a.pm + a.dim_D;
  a.theorem_inequality = a.dim_B <= a.bound;
  a.dim_L = G.g.algebra.dim();
  a.counterexample_inequality = a.dim_L <= 2 * a.dim_B;
  int64_t numer = static_cast<int64_t>(a.dim_L) - 2 * static_cast<int64_t>(a.pm);
  a.forced_dimD_lower = numer <= 0 ? 0 : (numer + 1) / 2;
  a.forces_dimD_ge_pm = a.forced_dimD_lower >= static_cast<int64_t>(a.pm);
  return a;
}

} // namespace nilsum
