#include <doctest.h>

#include "nilsum/enumerate.hpp"
#include "nilsum/lie.hpp"
#include "nilsum/subspace.hpp"

#include <set>

using namespace nilsum;

TEST_CASE("field arithmetic") {
  Fp F5(5);
  CHECK(F5.add(3, 4) == 2);
  CHECK(F5.inv(2) == 3);
  CHECK(F5.mul(2, F5.inv(2)) == 1);
  Fp F7(7);
  CHECK_THROWS_AS(F7.inv(0), std::domain_error);
  CHECK_THROWS_AS(Fp(6), std::invalid_argument);
  CHECK_THROWS_AS(Fp(1), std::invalid_argument);

  for (uint32_t p : {2u, 3u, 5u, 7u, 101u}) {
    Fp F(p);
    for (uint32_t a = 1; a < p; ++a) CHECK(F.mul(a, F.inv(a)) == 1);
    CHECK(F.reduce(-1) == p - 1);
  }
}

TEST_CASE("rref canonical form") {
  Mat id = Mat::identity(5, 3);
  size_t rank = 0;
  CHECK(rref(id, &rank) == id);
  CHECK(rank == 3);

  Mat zero(5, 2, 4);
  CHECK(rref(zero, &rank) == zero);
  CHECK(rank == 0);

  Mat m = Mat::from_rows(5, {{2, 4}, {1, 2}});
  Mat r = rref(m, &rank);
  CHECK(rank == 1);
  CHECK(r == Mat::from_rows(5, {{1, 2}, {0, 0}}));
}

TEST_CASE("rref is idempotent on random matrices") {
  DetRng rng(12345);
  for (uint32_t p : {2u, 3u, 5u}) {
    for (auto [rows, cols] : {std::pair<size_t, size_t>{2, 4}, {3, 3}, {4, 6}, {5, 5}}) {
      for (int trial = 0; trial < 500; ++trial) {
        Mat m(p, rows, cols);
        for (auto& v : m.a) v = rng.below(p);
        Mat r1 = rref(m);
        CHECK(rref(r1) == r1);
      }
    }
  }
}

TEST_CASE("subspace lattice operations") {
  auto e = [](size_t i) { return unit_vec(3, i); };
  Subspace U = Subspace::span(5, 3, {e(0)});
  Subspace V = Subspace::span(5, 3, {e(1)});
  CHECK(sum(U, V) == Subspace::span(5, 3, {e(0), e(1)}));
  CHECK(intersect(U, U) == U);

  Subspace W = Subspace::span(5, 3, {{1, 1, 0}});
  Subspace UV = Subspace::span(5, 3, {e(0), e(1)});
  CHECK(UV.contains(W));
  CHECK_FALSE(W.contains(UV));

  Subspace other_ambient = Subspace::span(5, 4, {unit_vec(4, 0)});
  CHECK_THROWS_AS(sum(U, other_ambient), std::invalid_argument);

  // reduce gives the canonical coset representative
  CHECK(vec_is_zero(UV.reduce({2, 3, 0})));
  CHECK_FALSE(vec_is_zero(UV.reduce({0, 0, 1})));
}

TEST_CASE("dimension formula on random subspace pairs") {
  DetRng rng(777);
  for (int trial = 0; trial < 500; ++trial) {
    uint32_t p = (trial % 3 == 0) ? 2 : (trial % 3 == 1) ? 3 : 5;
    size_t n = 2 + trial % 4;
    auto random_subspace = [&] {
      size_t gens = rng.below(static_cast<uint32_t>(n) + 1);
      std::vector<Vec> rows;
      for (size_t g = 0; g < gens; ++g) rows.push_back(rng.vec(p, n));
      return Subspace::span(p, n, rows);
    };
    Subspace U = random_subspace();
    Subspace V = random_subspace();
    CHECK(sum(U, V).dim() + intersect(U, V).dim() == U.dim() + V.dim());
    CHECK(sum(U, V).contains(U));
    CHECK(U.contains(intersect(U, V)));
  }
}

TEST_CASE("gaussian binomial and enumeration counts") {
  CHECK(gaussian_binomial(3, 1, 5) == 31);
  CHECK(gaussian_binomial(5, 2, 3) == 1210);

  // brute oracle for [3 1]_5: nonzero vectors of F_5^3 up to scale
  {
    std::set<Vec> lines;
    for (uint32_t a = 0; a < 5; ++a)
      for (uint32_t b = 0; b < 5; ++b)
        for (uint32_t c = 0; c < 5; ++c) {
          Vec v{a, b, c};
          if (vec_is_zero(v)) continue;
          size_t lead = 0;
          while (!v[lead]) ++lead;
          Fp F(5);
          lines.insert(vec_scale(5, F.inv(v[lead]), v));
        }
    CHECK(lines.size() == 31);
  }

  SubspaceEnumerator en31(5, 3, 1, 1u << 20);
  CHECK(en31.total() == 31);

  SubspaceEnumerator en1210(3, 5, 2, 1u << 20);
  CHECK(en1210.total() == 1210);

  SubspaceEnumerator zero_dim(7, 2, 0, 1u << 20);
  CHECK(zero_dim.total() == 1);
  size_t seen = 0;
  zero_dim.visit([&](uint64_t, const Subspace& s) {
    ++seen;
    CHECK(s.is_zero());
  });
  CHECK(seen == 1);
}

TEST_CASE("enumeration yields distinct canonical subspaces matching the count") {
  for (uint32_t p : {2u, 3u, 5u}) {
    for (size_t n = 1; n <= 5; ++n) {
      for (size_t k = 0; k <= n; ++k) {
        uint64_t expected = gaussian_binomial(static_cast<uint32_t>(n),
                                              static_cast<uint32_t>(k), p);
        if (expected > 5000) continue; // keep the grid quick
        SubspaceEnumerator en(p, n, k, 1u << 22);
        CHECK(en.total() == expected);
        std::set<Subspace> seen;
        uint64_t last_index = 0;
        en.visit([&](uint64_t idx, const Subspace& s) {
          CHECK(s.dim() == k);
          CHECK(rref(s.basis()) == s.basis()); // already canonical
          seen.insert(s);
          last_index = idx;
        });
        CHECK(seen.size() == expected);
        if (expected > 0) CHECK(last_index == expected - 1);
      }
    }
  }
}

TEST_CASE("enumeration budget is checked before iteration") {
  CHECK_THROWS_AS(SubspaceEnumerator(5, 5, std::nullopt, 100), BudgetExceeded);
  CHECK(subspace_count_all(5, 5) == 42176);
}
