#include <doctest.h>

#include "nilsum/constructions.hpp"

using namespace nilsum;

TEST_CASE("truncated polynomial algebra") {
  PolyAlgebra O3(3, 1);
  Vec x = O3.monomial({1});
  Vec x2 = O3.monomial({2});
  CHECK(vec_is_zero(O3.mul(x, x2))); // x * x^2 = x^3 = 0

  PolyAlgebra O32(3, 2);
  CHECK(O32.dim() == 9);

  PolyAlgebra O5(5, 1);
  Vec one_plus_x = vec_add(5, O5.one(), O5.monomial({1}));
  Vec prod = O5.mul(one_plus_x, O5.pow(one_plus_x, 4)); // (1+x)^5 with x^5 truncated
  CHECK(prod == O5.one());
  CHECK(O5.constant_term(prod) == 1);

  CHECK(O5.socle_index() == 4);
  CHECK_THROWS_AS(PolyAlgebra(5, 9), BudgetExceeded);
}

TEST_CASE("partial derivatives and derivations") {
  PolyAlgebra O(5, 2);
  Vec f = O.monomial({2, 1}); // x1^2 x2
  Vec df1 = O.dpartial(0, f);
  CHECK(df1 == vec_scale(5, 2, O.monomial({1, 1})));
  Vec df2 = O.dpartial(1, f);
  CHECK(df2 == O.monomial({2, 0}));

  // Leibniz rule on a spot pair
  Derivation d{{O.one(), O.monomial({1, 0})}}; // d1 + x1 d2
  Vec g = O.monomial({0, 2});
  Vec left = apply(O, d, O.mul(f, g));
  Vec right = vec_add(5, O.mul(apply(O, d, f), g), O.mul(f, apply(O, d, g)));
  CHECK(left == right);
}

TEST_CASE("witt algebra") {
  WittAlgebra W31 = witt_algebra(3, 1);
  CHECK(W31.algebra.dim() == 3);
  WittAlgebra W32 = witt_algebra(3, 2);
  CHECK(W32.algebra.dim() == 18);
  CHECK(validate_structure(W32.algebra).ok);

  // [d1, x1 d1] = d1
  WittAlgebra W5 = witt_algebra(5, 1);
  Vec d = unit_vec(5, W5.basis_index(0, 0));
  Vec xd = unit_vec(5, W5.basis_index(0, 1));
  CHECK(W5.algebra.bracket(d, xd) == d);

  // (W_m)_0 = derivations with no constant term
  Subspace w0 = W5.standard_filtration_zero();
  CHECK(w0.dim() == 4);
  CHECK(is_subalgebra(W5.algebra, w0));
}

TEST_CASE("zassenhaus algebra") {
  GradedAlgebra Z = zassenhaus(5, 1);
  CHECK(Z.algebra.dim() == 5);
  // [e_{-1}, e_0] = e_{-1}
  CHECK(Z.algebra.bracket(unit_vec(5, 0), unit_vec(5, 1)) == unit_vec(5, 0));
  // [e_0, e_i] = i e_i for every i
  for (int i = -1; i <= 3; ++i) {
    Vec ei = unit_vec(5, static_cast<size_t>(i + 1));
    Vec expect = vec_scale(5, Fp(5).reduce(i), ei);
    CHECK(Z.algebra.bracket(unit_vec(5, 1), ei) == expect);
  }

  GradedAlgebra Z2 = zassenhaus(5, 2);
  CHECK(Z2.algebra.dim() == 25);
  CHECK(Z2.min_degree() == -1);
  CHECK(Z2.max_degree() == 23);
  CHECK(validate_structure(Z2.algebra).ok);
}

TEST_CASE("zassenhaus matches the derivation realization") {
  for (uint32_t p : {5u, 7u}) {
    GradedAlgebra Z = zassenhaus(p, 1);
    WittAlgebra W = witt_algebra(p, 1);
    LieAlgebra rescaled = change_basis(W.algebra, zassenhaus_witt_rescaling(p));
    for (size_t i = 0; i < p; ++i)
      for (size_t j = i + 1; j < p; ++j)
        CHECK(rescaled.basis_bracket(i, j) == Z.algebra.basis_bracket(i, j));
  }
}

TEST_CASE("sl2 relations") {
  LieAlgebra L = sl2(7);
  Vec e = unit_vec(3, 0), h = unit_vec(3, 1), f = unit_vec(3, 2);
  CHECK(L.bracket(h, e) == vec_scale(7, 2, e));
  CHECK(L.bracket(h, f) == vec_scale(7, Fp(7).neg(2), f));
  CHECK(L.bracket(e, f) == h);
  CHECK(validate_structure(L).ok);
  CHECK(product_space(L, Subspace::full(7, 3), Subspace::full(7, 3)).dim() == 3);
  CHECK_THROWS_AS(sl2(2), std::invalid_argument);
}

TEST_CASE("tensor with O_m") {
  GradedAlgebra Z = zassenhaus(5, 1);
  PolyAlgebra O(5, 1);
  LieAlgebra T = tensor_with_poly(Z.algebra, O);
  CHECK(T.dim() == 25);

  // [e_{-1}&x, e_{-1}&1] = 0
  Vec a = unit_vec(25, 0 * 5 + 1);
  Vec b = unit_vec(25, 0 * 5 + 0);
  CHECK(vec_is_zero(T.bracket(a, b)));

  DetRng rng(99);
  for (int t = 0; t < 500; ++t) {
    Vec x = rng.vec(5, 25), y = rng.vec(5, 25), z = rng.vec(5, 25);
    Vec jac = T.bracket(T.bracket(x, y), z);
    jac = vec_add(5, jac, T.bracket(T.bracket(y, z), x));
    jac = vec_add(5, jac, T.bracket(T.bracket(z, x), y));
    CHECK(vec_is_zero(jac));
  }
}

TEST_CASE("graded sum G = S tensor O_m + D") {
  GradedAlgebra Z = zassenhaus(5, 1);
  PolyAlgebra O(5, 1);
  WittAlgebra W = witt_algebra(5, 1);
  Subspace D = Subspace::span(5, 5, {unit_vec(5, W.basis_index(0, 0))}); // <d/dx>
  GradedSum G = graded_sum(Z, O, W, D);
  CHECK(G.g.algebra.dim() == 26);
  CHECK(grading_compatible(G.g));

  // [d, e_0 & x] = e_0 & 1
  Vec d = unit_vec(26, 25);
  Vec e0x = G.e_tensor(0, O.monomial({1}));
  CHECK(G.g.algebra.bracket(d, e0x) == G.e_tensor(0, O.one()));

  // [G_1, G_{-1}] lies in G_0, exhaustively on component bases
  Subspace G1 = G.g.component(1), Gm1 = G.g.component(-1), G0 = G.g.component(0);
  CHECK(G0.contains(product_space(G.g.algebra, G1, Gm1)));

  // ad(e_0 & 1) is the grading scalar on each G_i and kills D
  Vec e01 = G.e_tensor(0, O.one());
  for (int i = -1; i <= 3; ++i) {
    Subspace Gi = G.g.component(i);
    for (size_t r = 0; r < Gi.dim(); ++r) {
      Vec v = Gi.basis_vector(r);
      Vec dv = G.g.algebra.bracket(e01, v);
      if (i == 0) {
        // degree-0 component splits as e_0&O_m + D; both are killed
        CHECK(vec_is_zero(dv));
      } else {
        CHECK(dv == vec_scale(5, Fp(5).reduce(i), v));
      }
    }
  }

  // D must be bracket-closed
  WittAlgebra W2 = witt_algebra(3, 2);
  Subspace bad = Subspace::span(3, 18, {unit_vec(18, W2.basis_index(0, 1)),
                                        unit_vec(18, W2.basis_index(1, 2))});
  if (!is_subalgebra(W2.algebra, bad))
    CHECK_THROWS_AS(graded_sum(zassenhaus(3, 1), PolyAlgebra(3, 2), W2, bad),
                    std::invalid_argument);
}

TEST_CASE("invariant ideal detection") {
  PolyAlgebra O(5, 1);
  WittAlgebra W = witt_algebra(5, 1);

  Subspace D = Subspace::span(5, 5, {unit_vec(5, W.basis_index(0, 0))});
  InvariantIdealReport r1 = invariant_ideal(O, W, D);
  CHECK_FALSE(r1.has_proper); // socle regenerates all of O_1 under d/dx
  CHECK(r1.witness == Subspace::full(5, 5));

  InvariantIdealReport r2 = invariant_ideal(O, W, Subspace::zero(5, 5));
  CHECK(r2.has_proper);
  CHECK(r2.witness == Subspace::span(5, 5, {O.socle()}));

  Subspace Dx = Subspace::span(5, 5, {unit_vec(5, W.basis_index(0, 1))}); // <x d/dx>
  InvariantIdealReport r3 = invariant_ideal(O, W, Dx);
  CHECK(r3.has_proper);
  // the witness is a proper nonzero ideal stable under x d/dx
  CHECK(r3.witness.dim() > 0);
  CHECK(r3.witness.dim() < 5);
  Mat xd_op = derivation_op(O, W.to_derivation(Dx.basis_vector(0)));
  for (size_t i = 0; i < r3.witness.dim(); ++i)
    CHECK(r3.witness.contains(mat_apply(xd_op, r3.witness.basis_vector(i))));
}

TEST_CASE("semidirect sums and module examples") {
  // zero action gives a direct sum with an abelian summand
  LieAlgebra H = heisenberg(5);
  std::vector<Mat> zero_action(3, Mat(5, 2, 2));
  LieAlgebra direct = semidirect(H, zero_action);
  CHECK(direct.dim() == 5);
  CHECK(validate_structure(direct).ok);
  Subspace V = Subspace::span(5, 5, {unit_vec(5, 3), unit_vec(5, 4)});
  CHECK(centralizer(direct, Subspace::full(5, 5)).contains(V));

  ModuleExample tdn = two_dim_nonabelian_module(3);
  LieAlgebra L1 = semidirect(tdn.algebra, tdn.action);
  CHECK(L1.dim() == 5);
  CHECK(validate_structure(L1).ok);
  CHECK(module_faithful(tdn.algebra, tdn.action));
  CHECK(module_irreducible(tdn.action));

  ModuleExample hw = heisenberg_weyl_module(5);
  LieAlgebra L2 = semidirect(hw.algebra, hw.action);
  CHECK(L2.dim() == 8);
  CHECK(validate_structure(L2).ok);
  CHECK(module_faithful(hw.algebra, hw.action));
  CHECK(module_irreducible(hw.action));

  // non-homomorphic action is rejected
  std::vector<Mat> bad = tdn.action;
  bad[0].at(0, 0) = Fp(3).add(bad[0].at(0, 0), 1);
  CHECK_THROWS_AS(semidirect(tdn.algebra, bad), std::invalid_argument);
}

TEST_CASE("p-th powers of derivations") {
  PolyAlgebra O(5, 1);
  Derivation ddx{{O.one()}};
  Derivation dp = pth_power(O, ddx);
  CHECK(vec_is_zero(dp.components[0])); // (d/dx)^5 = 0

  Derivation xd{{O.monomial({1})}};
  Derivation xdp = pth_power(O, xd);
  CHECK(xdp.components[0] == xd.components[0]); // (x d/dx)^5 = x d/dx by Fermat

  CHECK(derivation_nilpotency_order(O, ddx) == 5);
  CHECK_FALSE(derivation_nilpotency_order(O, xd).has_value());
  CHECK(is_nilpotent_derivation(O, ddx));
  CHECK_FALSE(is_nilpotent_derivation(O, xd));
}

TEST_CASE("named solvable families") {
  LieAlgebra U = upper_triangular(7, 3);
  CHECK(U.dim() == 6);
  CHECK(validate_structure(U).ok);
  CHECK(is_solvable(U));
  CHECK_FALSE(is_nilpotent(U));

  LieAlgebra N = strictly_upper_triangular(7, 3);
  CHECK(N.dim() == 3);
  CHECK(validate_structure(N).ok);
  CHECK(is_nilpotent(N));
}
