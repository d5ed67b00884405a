#include "nilsum/filtration.hpp"

#include <algorithm>

namespace nilsum {

void validate_filtration(const Filtration& F) {
  if (F.terms.empty()) throw std::invalid_argument("filtration: no terms");
  if (F.terms.begin()->first != F.min_index || F.terms.rbegin()->first != F.max_index)
    throw std::invalid_argument("filtration: index range mismatch");
  if (!(F.term(F.min_index) == F.ambient))
    throw std::invalid_argument("filtration: lowest term must be the filtered space");
  for (int i = F.min_index; i < F.max_index; ++i)
    if (!F.term(i).contains(F.term(i + 1)))
      throw std::invalid_argument("filtration: terms not descending at index " +
                                  std::to_string(i));
  // bracket compatibility over all stored pairs; i+j clamps outside the range
  for (int i = F.min_index; i <= F.max_index; ++i)
    for (int j = i; j <= F.max_index; ++j) {
      Subspace prod = product_space(F.algebra, F.term(i), F.term(j));
      if (!F.term(i + j).contains(prod))
        throw std::invalid_argument("filtration: [L_" + std::to_string(i) + ", L_" +
                                    std::to_string(j) + "] escapes L_" + std::to_string(i + j));
    }
}

Filtration weisfeiler_filtration(const LieAlgebra& L, const Subspace& L0) {
  size_t n = L.dim();
  if (L0.ambient_dim() != n || L0.p() != L.p())
    throw std::invalid_argument("weisfeiler_filtration: ambient mismatch");
  if (!is_subalgebra(L, L0))
    throw std::invalid_argument("weisfeiler_filtration: L0 is not a subalgebra");
  if (L0.dim() == n) throw std::invalid_argument("weisfeiler_filtration: L0 must be proper");

  Subspace full = Subspace::full(L.p(), n);

  // L_{-1} = L0 + minimal L0-submodule of L/L0, scanned over standard basis
  // generators outside L0; closure computed on preimages.
  Subspace best;
  size_t best_gen = n;
  for (size_t j = 0; j < n; ++j) {
    Vec ej = unit_vec(n, j);
    if (L0.contains(ej)) continue;
    Subspace M = sum(L0, Subspace::span(L.p(), n, {ej}));
    for (;;) {
      Subspace next = sum(M, product_space(L, L0, M));
      if (next == M) break;
      M = std::move(next);
    }
    if (best_gen == n || M.dim() < best.dim()) {
      best = M;
      best_gen = j;
    }
  }
  if (best_gen == n) throw std::logic_error("weisfeiler_filtration: no generator outside L0");

  Filtration F;
  F.algebra = L;
  F.ambient = full;
  F.choice_note = "L_{-1} generated from basis vector " + std::to_string(best_gen) +
                  " (submodule dimension " + std::to_string(best.dim() - L0.dim()) + ")";

  Subspace lminus1 = best;

  // descending part: L_{i+1} = { x in L_i : [x, L_{-1}] <= L_i }
  std::vector<Subspace> down{L0};
  for (;;) {
    const Subspace& cur = down.back();
    // conditions: reduce_mod_cur(ad(y_r) x) = 0 for every basis y_r of L_{-1},
    // intersected with cur
    Mat red(L.p(), n, n);
    for (size_t c = 0; c < n; ++c) {
      Vec r = cur.reduce(unit_vec(n, c));
      for (size_t i = 0; i < n; ++i) red.at(i, c) = r[i];
    }
    Mat stacked(L.p(), lminus1.dim() * n, n);
    for (size_t r = 0; r < lminus1.dim(); ++r) {
      Mat cond = mat_mul(red, L.ad(lminus1.basis_vector(r)));
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) stacked.at(r * n + i, j) = cond.at(i, j);
    }
    Subspace next = intersect(cur, Subspace::from_rref(kernel_basis(stacked)));
    if (next == cur) {
      if (!cur.is_zero())
        throw std::invalid_argument(
            "weisfeiler_filtration: descending chain stabilizes above zero (L0 contains an "
            "ideal of L)");
      down.pop_back(); // drop the zero repeat; terms stop at the last nonzero
      break;
    }
    if (next.is_zero()) {
      break; // chain reached zero; zero itself is implicit via clamping
    }
    down.push_back(std::move(next));
  }

  // ascending part: L_{-k-1} = L_{-k} + [L_{-k}, L_{-1}]
  std::vector<Subspace> up{lminus1};
  while (!(up.back() == full)) {
    Subspace next = sum(up.back(), product_space(L, up.back(), lminus1));
    if (next == up.back())
      throw std::invalid_argument(
          "weisfeiler_filtration: L_{-1} does not generate L (ascending chain stabilizes "
          "early)");
    up.push_back(std::move(next));
  }

  F.min_index = -static_cast<int>(up.size());
  F.max_index = static_cast<int>(down.size()) - 1;
  for (size_t k = 0; k < up.size(); ++k) F.terms.emplace(-static_cast<int>(k) - 1, up[k]);
  for (size_t k = 0; k < down.size(); ++k) F.terms.emplace(static_cast<int>(k), down[k]);

  validate_filtration(F);
  return F;
}

GradedOfFiltration associated_graded(const Filtration& F) {
  validate_filtration(F);
  uint32_t p = F.algebra.p();
  size_t n = F.algebra.dim();

  GradedOfFiltration out;
  std::vector<Vec> rep_rows;
  std::vector<int> degs;
  for (int d = F.min_index; d <= F.max_index; ++d) {
    Subspace cur = F.term(d);
    Subspace nxt = F.term(d + 1);
    std::vector<Vec> reduced;
    for (size_t i = 0; i < cur.dim(); ++i) reduced.push_back(nxt.reduce(cur.basis_vector(i)));
    Subspace reps = Subspace::span(p, n, reduced);
    size_t begin = rep_rows.size();
    for (size_t i = 0; i < reps.dim(); ++i) {
      rep_rows.push_back(reps.basis_vector(i));
      degs.push_back(d);
    }
    out.blocks[d] = {begin, rep_rows.size()};
    if (reps.dim() != cur.dim() - nxt.dim())
      throw std::logic_error("associated_graded: representative count mismatch");
  }

  out.reps = rep_rows.empty() ? Mat(p, 0, n) : Mat::from_rows(p, rep_rows);
  size_t gdim = rep_rows.size();

  std::vector<std::string> labels;
  for (size_t r = 0; r < gdim; ++r)
    labels.push_back("gr(" + std::to_string(degs[r]) + ")[" + std::to_string(r) + "]");
  LieAlgebra G(p, gdim, labels);

  // coordinates of a class inside a degree block
  auto class_coords = [&](int d, const Vec& v) -> Vec {
    auto [b, e] = out.blocks.at(d);
    Mat rows(p, e - b, n);
    for (size_t r = b; r < e; ++r) rows.set_row(r - b, out.reps.row(r));
    Vec local;
    if (!solve_in_rowspace(rows, F.term(d + 1).reduce(v), local))
      throw std::invalid_argument("associated_graded: bracket escapes its filtration degree");
    return local;
  };

  for (size_t i = 0; i < gdim; ++i)
    for (size_t j = i + 1; j < gdim; ++j) {
      int d = degs[i] + degs[j];
      Vec w = F.algebra.bracket(out.reps.row_vec(i), out.reps.row_vec(j));
      std::vector<Term> terms;
      if (d >= F.min_index && d <= F.max_index) {
        Vec local = class_coords(d, w);
        auto [b, e] = out.blocks.at(d);
        for (size_t t = 0; t < local.size(); ++t)
          if (local[t]) terms.push_back({b + t, local[t]});
      } else if (d > F.max_index) {
        if (!F.term(d).contains(w)) // i.e. w != 0
          throw std::invalid_argument("associated_graded: bracket escapes the top term");
      }
      // below min_index the quotient is zero: class is zero by definition
      G.set_bracket(i, j, std::move(terms));
    }

  out.graded.algebra = std::move(G);
  out.graded.degree = std::move(degs);
  validate_grading(out.graded);
  StructureReport rep = validate_structure(out.graded.algebra);
  if (!rep.ok)
    throw std::invalid_argument("associated_graded: Jacobi fails on the graded algebra (" +
                                std::to_string(rep.violations.size()) + " triples)");

  size_t total = 0;
  for (auto& [d, be] : out.blocks) total += be.second - be.first;
  if (total != F.ambient.dim())
    throw std::logic_error("associated_graded: dimension conservation failed");
  return out;
}

Filtration induced_filtration(const Subspace& B, const Filtration& F) {
  if (!is_subalgebra(F.algebra, B))
    throw std::invalid_argument("induced_filtration: B is not a subalgebra");
  Filtration out;
  out.algebra = F.algebra;
  out.ambient = B;
  out.min_index = F.min_index;
  out.max_index = F.max_index;
  for (int d = F.min_index; d <= F.max_index; ++d) out.terms.emplace(d, intersect(B, F.term(d)));
  // trim trailing zero terms so max matches the last nonzero entry
  while (out.max_index > out.min_index && out.terms.at(out.max_index).is_zero()) {
    out.terms.erase(out.max_index);
    --out.max_index;
  }
  validate_filtration(out);
  return out;
}

GradedEmbedding gr_embed(const Subspace& B, const Filtration& F) {
  GradedEmbedding out;
  Filtration FB = induced_filtration(B, F);
  out.source = associated_graded(FB);
  out.target = associated_graded(F);

  uint32_t p = F.algebra.p();
  size_t n = F.algebra.dim();
  out.injective = true;
  out.bracket_preserving = true;

  // degreewise matrices: source rep r (degree d) -> class of the same vector
  // in gr L at degree d
  std::map<int, Mat> maps;
  for (auto& [d, be] : out.source.blocks) {
    auto [sb, se] = be;
    if (out.target.blocks.find(d) == out.target.blocks.end()) {
      if (se > sb) out.injective = false; // nonzero source maps into nothing
      continue;
    }
    auto [tb, te] = out.target.blocks.at(d);
    Mat rows(p, te - tb, n);
    for (size_t r = tb; r < te; ++r) rows.set_row(r - tb, out.target.reps.row(r));
    Mat M(p, se - sb, te - tb);
    for (size_t r = sb; r < se; ++r) {
      Vec cls = F.term(d + 1).reduce(out.source.reps.row_vec(r));
      Vec local;
      if (!solve_in_rowspace(rows, cls, local))
        throw std::logic_error("gr_embed: source class not representable in gr L");
      M.set_row(r - sb, local);
    }
    if (rank_of(M) != M.rows) out.injective = false;
    maps[d] = std::move(M);
  }
  out.maps = std::move(maps);

  // bracket preservation on source basis pairs, checked through the maps
  auto image_coords = [&](size_t src_row, int d) -> Vec {
    auto [sb, se] = out.source.blocks.at(d);
    (void)se;
    const Mat& M = out.maps.at(d);
    return M.row_vec(src_row - sb);
  };
  const LieAlgebra& GS = out.source.graded.algebra;
  const LieAlgebra& GT = out.target.graded.algebra;
  for (size_t i = 0; i < GS.dim() && out.bracket_preserving; ++i)
    for (size_t j = i + 1; j < GS.dim(); ++j) {
      int di = out.source.graded.degree[i];
      int dj = out.source.graded.degree[j];
      // embed i and j, bracket in gr L
      Vec xi(GT.dim(), 0), xj(GT.dim(), 0);
      auto place = [&](size_t row, int d, Vec& dst) {
        auto itb = out.target.blocks.find(d);
        if (itb == out.target.blocks.end() || out.maps.find(d) == out.maps.end()) return;
        Vec local = image_coords(row, d);
        for (size_t t = 0; t < local.size(); ++t) dst[itb->second.first + t] = local[t];
      };
      place(i, di, xi);
      place(j, dj, xj);
      Vec lhs = GT.bracket(xi, xj);
      // bracket in gr B, then embed
      Vec br(GS.dim(), 0);
      for (const Term& t : GS.basis_bracket(i, j)) br[t.k] = t.c;
      Vec rhs(GT.dim(), 0);
      int dk = di + dj;
      auto sblk = out.source.blocks.find(dk);
      if (sblk != out.source.blocks.end()) {
        for (size_t r = sblk->second.first; r < sblk->second.second; ++r)
          if (br[r]) {
            Vec img(GT.dim(), 0);
            place(r, dk, img);
            vec_add_scaled(p, rhs, br[r], img);
          }
      }
      if (!(lhs == rhs)) {
        out.bracket_preserving = false;
        break;
      }
    }
  return out;
}

} // namespace nilsum
