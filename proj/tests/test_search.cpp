#include <doctest.h>

#include "nilsum/search.hpp"
#include "nilsum/spec_expr.hpp"

using namespace nilsum;

TEST_CASE("serial and parallel kernels agree") {
  GradedAlgebra W = zassenhaus(5, 1);

  auto subs_s = enumerate_subalgebras(W.algebra, 1u << 20, Exec::serial);
  auto subs_p = enumerate_subalgebras(W.algebra, 1u << 20, Exec::parallel);
  CHECK(subs_s == subs_p);
  CHECK(subs_s.size() == 1026);

  auto nil_s = classify_nilpotent(W.algebra, subs_s, Exec::serial);
  auto nil_p = classify_nilpotent(W.algebra, subs_s, Exec::parallel);
  CHECK(nil_s == nil_p);

  ParsedAlgebra hw = parse_algebra_spec("semidirect:heisenberg_weyl,p=5");
  auto ideals_s = one_dim_ideals(hw.algebra, 1u << 20, Exec::serial);
  auto ideals_p = one_dim_ideals(hw.algebra, 1u << 20, Exec::parallel);
  CHECK(ideals_s == ideals_p);
  CHECK(ideals_s.empty());

  SearchOptions o;
  o.fast_paths = false;
  o.exec = Exec::serial;
  SearchResult rs = search_decomposition(W.algebra, o);
  o.exec = Exec::parallel;
  SearchResult rp = search_decomposition(W.algebra, o);
  CHECK(rs.status == rp.status);
  CHECK(rs.witness == rp.witness);
  CHECK(rs.stats.nilpotent_count == rp.stats.nilpotent_count);
  CHECK(rs.stats.pairs_tested == rp.stats.pairs_tested);

  Lemma4Report l4s = lemma4_exhaustive(3, 1, 1u << 16, Exec::serial);
  Lemma4Report l4p = lemma4_exhaustive(3, 1, 1u << 16, Exec::parallel);
  CHECK(l4s.qualifying == l4p.qualifying);
  CHECK(l4s.qualifying_dims == l4p.qualifying_dims);

  Lemma4Report smp_s = lemma4_sample(3, 2, 100, 9, Exec::serial);
  Lemma4Report smp_p = lemma4_sample(3, 2, 100, 9, Exec::parallel);
  CHECK(smp_s.qualifying == smp_p.qualifying);
  CHECK(smp_s.qualifying_dims == smp_p.qualifying_dims);
}

TEST_CASE("sl2 has no nilpotent pair decomposition") {
  SearchOptions o;
  SearchResult r = search_decomposition(sl2(7), o);
  CHECK(r.status == SearchStatus::exhausted_none);
  CHECK(r.stats.subspaces_scanned == 116); // 2 * 57 + 2
}

TEST_CASE("one dimensional ideal scans") {
  LieAlgebra ab = abelian_algebra(5, 2);
  auto lines = one_dim_ideals(ab, 1u << 16, Exec::parallel);
  CHECK(lines.size() == 6); // p + 1

  auto none = one_dim_ideals(sl2(7), 1u << 16, Exec::parallel);
  CHECK(none.empty());
}

TEST_CASE("fast paths find the classical decompositions") {
  SearchOptions o;
  SearchResult ut = search_decomposition(upper_triangular(7, 4), o);
  CHECK(ut.status == SearchStatus::decomposition_found);
  CHECK(ut.stats.fast_path == "cartan_plus_commutant");
  REQUIRE(ut.witness.has_value());
  CHECK(verify_decomposition(upper_triangular(7, 4), ut.witness->first, ut.witness->second));

  ParsedAlgebra hw = parse_algebra_spec("semidirect:heisenberg_weyl,p=5");
  SearchResult r = search_decomposition(hw.algebra, o);
  CHECK(r.status == SearchStatus::decomposition_found);
  REQUIRE(r.witness.has_value());
  CHECK(verify_decomposition(hw.algebra, r.witness->first, r.witness->second));
}

TEST_CASE("nilpotent algebras decompose trivially") {
  SearchOptions o;
  SearchResult r = search_decomposition(strictly_upper_triangular(5, 4), o);
  CHECK(r.status == SearchStatus::decomposition_found);
}

TEST_CASE("budget statuses are explicit") {
  CHECK_THROWS_AS(enumerate_subalgebras(abelian_algebra(5, 8), 1000, Exec::parallel),
                  BudgetExceeded);

  // dim 8 over GF(5): the lattice dwarfs any sane budget; with fast paths
  // off, exhaustive mode must report it rather than truncate
  ParsedAlgebra hw = parse_algebra_spec("semidirect:heisenberg_weyl,p=5");
  SearchOptions o;
  o.fast_paths = false;
  SearchResult r = search_decomposition(hw.algebra, o);
  CHECK(r.status == SearchStatus::budget_exhausted);
}

TEST_CASE("randomized search is reproducible and verified") {
  ParsedAlgebra hw = parse_algebra_spec("semidirect:heisenberg_weyl,p=5");
  SearchOptions o;
  o.exhaustive = false;
  o.fast_paths = false;
  o.seed = 99;
  o.randomized_budget = 400;
  SearchResult a = search_decomposition(hw.algebra, o);
  SearchResult b = search_decomposition(hw.algebra, o);
  CHECK(a.status == b.status);
  CHECK(a.witness == b.witness);
  CHECK(a.stats.samples_drawn == b.stats.samples_drawn);
  if (a.witness)
    CHECK(verify_decomposition(hw.algebra, a.witness->first, a.witness->second));
}

TEST_CASE("witness invariants on found decompositions") {
  // on the Witt algebra nothing may be found; on upper triangulars the
  // witness must re-verify and be canonically ordered
  SearchOptions o;
  for (size_t n : {2u, 3u}) {
    LieAlgebra U = upper_triangular(7, n);
    SearchResult r = search_decomposition(U, o);
    REQUIRE(r.witness.has_value());
    const auto& [A, B] = *r.witness;
    CHECK(verify_decomposition(U, A, B));
    CHECK((A < B || A == B));
  }
}

TEST_CASE("element nilpotency scan over a derivation subalgebra") {
  WittAlgebra W = witt_algebra(5, 1);
  Subspace d = Subspace::span(5, 5, {unit_vec(5, W.basis_index(0, 0))});
  CHECK(all_elements_nilpotent(W, d, 1u << 16));

  Subspace xd = Subspace::span(5, 5, {unit_vec(5, W.basis_index(0, 1))});
  CHECK_FALSE(all_elements_nilpotent(W, xd, 1u << 16));

  Subspace big = Subspace::full(5, 5);
  CHECK_FALSE(all_elements_nilpotent(W, big, 1u << 16));
}
