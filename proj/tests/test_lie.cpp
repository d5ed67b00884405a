#include <doctest.h>

#include "nilsum/constructions.hpp"
#include "nilsum/lie.hpp"

using namespace nilsum;

namespace {

LieAlgebra two_dim_nonabelian(uint32_t p) {
  LieAlgebra L(p, 2, {"h", "e"});
  L.set_bracket(0, 1, {{1, 1}});
  return L;
}

} // namespace

TEST_CASE("validate_structure accepts the classical algebras") {
  CHECK(validate_structure(sl2(7)).ok);
  CHECK(validate_structure(zassenhaus(5, 1).algebra).ok);
  CHECK(validate_structure(witt_algebra(5, 1).algebra).ok);
}

TEST_CASE("validate_structure reports a deliberate Jacobi violation") {
  // dim 3 has exactly one basis triple; a broken table must name it
  LieAlgebra L(5, 3);
  L.set_bracket(0, 1, {{0, 1}});         // [e1,e2] = e1
  L.set_bracket(0, 2, {{1, 1}, {2, 1}}); // [e1,e3] = e2 + e3 (perturbed)
  StructureReport rep = validate_structure(L);
  CHECK_FALSE(rep.ok);
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0] == std::array<size_t, 3>{0, 1, 2});
}

TEST_CASE("bracket and product_space") {
  LieAlgebra L = sl2(7);
  Subspace zero = Subspace::zero(7, 3);
  Subspace full = Subspace::full(7, 3);
  CHECK(product_space(L, zero, full).is_zero());
  CHECK(product_space(L, full, full) == full); // sl2 is perfect

  LieAlgebra N = two_dim_nonabelian(5);
  Subspace n_full = Subspace::full(5, 2);
  Subspace commutant = product_space(N, n_full, n_full);
  CHECK(commutant == Subspace::span(5, 2, {{0, 1}})); // <e>
}

TEST_CASE("subalgebra closure") {
  GradedAlgebra W = zassenhaus(5, 1);
  // e_{-1} is index 0, e_2 is index 3
  Subspace S = Subspace::span(5, 5, {unit_vec(5, 0), unit_vec(5, 3)});
  CHECK(subalgebra_closure(W.algebra, S) == Subspace::full(5, 5));

  LieAlgebra L = sl2(7);
  Subspace line = Subspace::span(7, 3, {{1, 2, 3}});
  CHECK(subalgebra_closure(L, line) == line); // [x,x] = 0

  Subspace borel = Subspace::span(7, 3, {unit_vec(3, 0), unit_vec(3, 1)});
  CHECK(subalgebra_closure(L, borel) == borel);
}

TEST_CASE("derived and lower central series") {
  LieAlgebra A = abelian_algebra(5, 3);
  Subspace full3 = Subspace::full(5, 3);
  SeriesReport d = derived_series(A, full3);
  CHECK(d.reached_zero());
  CHECK(d.steps == 1);
  CHECK(lower_central_series(A, full3).steps == 1);

  LieAlgebra N = two_dim_nonabelian(5);
  Subspace full2 = Subspace::full(5, 2);
  SeriesReport nd = derived_series(N, full2);
  REQUIRE(nd.chain.size() == 3);
  CHECK(nd.chain[0].dim() == 2);
  CHECK(nd.chain[1].dim() == 1);
  CHECK(nd.chain[2].dim() == 0);
  SeriesReport nl = lower_central_series(N, full2);
  CHECK_FALSE(nl.reached_zero());
  CHECK(nl.chain.back().dim() == 1);

  LieAlgebra S = sl2(7);
  SeriesReport sd = derived_series(S, Subspace::full(7, 3));
  CHECK_FALSE(sd.reached_zero());
  CHECK(sd.chain.back().dim() == 3);

  Subspace not_closed = Subspace::span(7, 3, {unit_vec(3, 0), unit_vec(3, 2)});
  CHECK_THROWS_AS(derived_series(S, not_closed), std::invalid_argument);
}

TEST_CASE("solvable and nilpotent predicates") {
  LieAlgebra strict = strictly_upper_triangular(7, 3);
  CHECK(is_nilpotent(strict));
  CHECK(is_solvable(strict));

  LieAlgebra S = sl2(7);
  Subspace borel = Subspace::span(7, 3, {unit_vec(3, 0), unit_vec(3, 1)});
  CHECK(is_solvable(S, borel));
  CHECK_FALSE(is_nilpotent(S, borel));

  GradedAlgebra W = zassenhaus(5, 1);
  CHECK_FALSE(is_solvable(W.algebra));
  CHECK_FALSE(is_nilpotent(W.algebra));
}

TEST_CASE("centralizer, center, normalizer") {
  LieAlgebra A = abelian_algebra(5, 4);
  CHECK(center(A) == Subspace::full(5, 4));
  CHECK(center(sl2(7)).is_zero());

  // centralizer of d/dx1 in W_2 over GF(3): both coefficient polynomials
  // must be free of x1, which spans f(x2) d1 + g(x2) d2
  WittAlgebra W2 = witt_algebra(3, 2);
  Vec d1 = unit_vec(W2.algebra.dim(), W2.basis_index(0, 0));
  Subspace C = centralizer(W2.algebra, Subspace::span(3, W2.algebra.dim(), {d1}));
  CHECK(C.dim() == 6);
  std::vector<Vec> expected;
  for (uint32_t var = 0; var < 2; ++var)
    for (uint32_t e2 = 0; e2 < 3; ++e2)
      expected.push_back(unit_vec(W2.algebra.dim(), W2.basis_index(var, W2.poly.mono_index({0, e2}))));
  CHECK(C == Subspace::span(3, W2.algebra.dim(), expected));

  // normalizer of the Borel in sl2 is the Borel
  LieAlgebra S = sl2(7);
  Subspace borel = Subspace::span(7, 3, {unit_vec(3, 0), unit_vec(3, 1)});
  CHECK(normalizer(S, borel) == borel);
}

TEST_CASE("ad matrices and nilpotency of ad") {
  LieAlgebra H = heisenberg(5);
  CHECK(H.ad(unit_vec(3, 2)).is_zero()); // Z is central

  GradedAlgebra W = zassenhaus(5, 1);
  CHECK(is_ad_nilpotent(W.algebra, unit_vec(5, 0)));        // e_{-1}
  CHECK_FALSE(is_ad_nilpotent(W.algebra, unit_vec(5, 1)));  // e_0 is toral
}

TEST_CASE("ad acts by derivations on random triples") {
  DetRng rng(5150);
  for (const LieAlgebra& L : {sl2(7), heisenberg(5), upper_triangular(5, 3)}) {
    for (int t = 0; t < 200; ++t) {
      Vec x = rng.vec(L.p(), L.dim());
      Vec y = rng.vec(L.p(), L.dim());
      Vec z = rng.vec(L.p(), L.dim());
      Vec lhs = L.bracket(x, L.bracket(y, z));
      Vec rhs = vec_add(L.p(), L.bracket(L.bracket(x, y), z), L.bracket(y, L.bracket(x, z)));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("cartan subalgebra search") {
  LieAlgebra H = heisenberg(5);
  CHECK(cartan_subalgebra(H, 1) == Subspace::full(5, 3)); // nilpotent L is its own Cartan

  LieAlgebra N = two_dim_nonabelian(7);
  Subspace C = cartan_subalgebra(N, 2);
  CHECK(C.dim() == 1);
  CHECK(C.basis_vector(0)[0] != 0); // nonzero h-part, else not self-normalizing
  CHECK(is_nilpotent(N, C));
  CHECK(normalizer(N, C) == C);

  LieAlgebra U3 = upper_triangular(7, 3);
  Subspace D = cartan_subalgebra(U3, 3);
  CHECK(D.dim() == 3);
  CHECK(is_nilpotent(U3, D));
  CHECK(normalizer(U3, D) == D);

  // oracle: the null component of a regular diagonal element is the diagonal
  Vec x(6, 0);
  x[0] = 1; // E11
  x[3] = 2; // E22
  x[5] = 3; // E33
  Subspace null_comp = Subspace::from_rref(kernel_basis(mat_pow(U3.ad(x), 6)));
  std::vector<Vec> diag{unit_vec(6, 0), unit_vec(6, 3), unit_vec(6, 5)};
  CHECK(null_comp == Subspace::span(7, 6, diag));
}

TEST_CASE("nilpotent implies solvable on encountered subalgebras") {
  DetRng rng(31337);
  LieAlgebra U = upper_triangular(5, 4);
  for (int t = 0; t < 50; ++t) {
    std::vector<Vec> gens;
    for (int g = 0; g < 2; ++g) gens.push_back(rng.vec(5, U.dim()));
    Subspace A = subalgebra_closure(U, Subspace::span(5, U.dim(), gens));
    if (is_nilpotent(U, A)) CHECK(is_solvable(U, A));
  }
}

TEST_CASE("change of basis preserves structure") {
  LieAlgebra S = sl2(7);
  Mat T = Mat::from_rows(7, {{1, 2, 0}, {0, 1, 3}, {1, 0, 2}});
  LieAlgebra S2 = change_basis(S, T);
  CHECK_THROWS_AS(change_basis(S, Mat::from_rows(7, {{1, 2, 0}, {0, 1, 3}, {1, 0, 1}})),
                  std::domain_error); // singular mod 7
  CHECK(validate_structure(S2).ok);
  CHECK(is_solvable(S2) == is_solvable(S));
  // changing back recovers the original table
  LieAlgebra S3 = change_basis(S2, invert(T));
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = i + 1; j < 3; ++j) CHECK(S3.basis_bracket(i, j) == S.basis_bracket(i, j));
}
