#include "nilsum/cochain.hpp"

#include <algorithm>

namespace nilsum {

Vec Cochain1::eval(const Vec& x) const {
  Vec out(dim, 0);
  for (size_t i = 0; i < dim; ++i)
    if (x[i]) vec_add_scaled(p, out, x[i], values[i]);
  return out;
}

Vec Cochain2::eval_basis(size_t i, size_t j) const {
  if (i == j) return Vec(dim, 0);
  if (i < j) return table[pair_index(i, j)];
  return vec_scale(p, p - 1, table[pair_index(j, i)]);
}

Vec Cochain2::eval(const Vec& x, const Vec& y) const {
  Fp F(p);
  Vec out(dim, 0);
  for (size_t j = 1; j < dim; ++j) {
    if (x[j] == 0 && y[j] == 0) continue;
    for (size_t i = 0; i < j; ++i) {
      uint32_t c = F.sub(F.mul(x[i], y[j]), F.mul(x[j], y[i]));
      if (c) vec_add_scaled(p, out, c, table[pair_index(i, j)]);
    }
  }
  return out;
}

bool Cochain2::is_zero() const {
  for (const Vec& v : table)
    if (!vec_is_zero(v)) return false;
  return true;
}

Cochain3 Cochain3::zero(uint32_t p, size_t dim) {
  size_t triples = dim >= 3 ? dim * (dim - 1) * (dim - 2) / 6 : 0;
  return {p, dim, std::vector<Vec>(triples, Vec(dim, 0))};
}

size_t Cochain3::triple_index(size_t i, size_t j, size_t k) const {
  // i < j < k
  return k * (k - 1) * (k - 2) / 6 + j * (j - 1) / 2 + i;
}

bool Cochain3::is_zero() const {
  for (const Vec& v : table)
    if (!vec_is_zero(v)) return false;
  return true;
}

Cochain3 add(const Cochain3& a, const Cochain3& b) {
  if (a.dim != b.dim || a.p != b.p) throw std::invalid_argument("Cochain3 add: shape mismatch");
  Cochain3 out = a;
  for (size_t t = 0; t < out.table.size(); ++t) out.table[t] = vec_add(a.p, out.table[t], b.table[t]);
  return out;
}

Cochain2 coboundary1(const LieAlgebra& L, const Cochain1& phi) {
  size_t n = L.dim();
  Cochain2 out = Cochain2::zero(L.p(), n);
  Fp F(L.p());
  for (size_t j = 1; j < n; ++j)
    for (size_t i = 0; i < j; ++i) {
      // [e_i, phi(e_j)] - [e_j, phi(e_i)] - phi([e_i, e_j])
      Vec v(n, 0);
      Vec a = L.bracket(unit_vec(n, i), phi.values[j]);
      Vec b = L.bracket(unit_vec(n, j), phi.values[i]);
      v = vec_sub(L.p(), a, b);
      for (const Term& t : L.basis_bracket(i, j))
        vec_add_scaled(L.p(), v, F.neg(t.c), phi.values[t.k]);
      out.at(i, j) = std::move(v);
    }
  return out;
}

Cochain3 coboundary2(const LieAlgebra& L, const Cochain2& psi) {
  size_t n = L.dim();
  uint32_t p = L.p();
  Cochain3 out = Cochain3::zero(p, n);
  Fp F(p);
  for (size_t k = 2; k < n; ++k)
    for (size_t j = 1; j < k; ++j)
      for (size_t i = 0; i < j; ++i) {
        Vec v(n, 0);
        // [psi(x,y), z] + [psi(z,x), y] + [psi(y,z), x]
        v = L.bracket_with_basis(psi.at(i, j), k);
        Vec t2 = L.bracket_with_basis(vec_scale(p, F.neg(1), psi.at(i, k)), j); // psi(z,x) = -psi(x,z)
        Vec t3 = L.bracket_with_basis(psi.at(j, k), i);
        v = vec_add(p, v, vec_add(p, t2, t3));
        // + psi([x,y], z) + psi([z,x], y) + psi([y,z], x)
        for (const Term& t : L.basis_bracket(i, j))
          vec_add_scaled(p, v, t.c, psi.eval_basis(t.k, k));
        for (const Term& t : L.basis_bracket(i, k)) // [z,x] = -[x,z]
          vec_add_scaled(p, v, F.neg(t.c), psi.eval_basis(t.k, j));
        for (const Term& t : L.basis_bracket(j, k))
          vec_add_scaled(p, v, t.c, psi.eval_basis(t.k, i));
        out.at(i, j, k) = std::move(v);
      }
  return out;
}

Cochain3 star(const Cochain2& phi, const Cochain2& psi) {
  if (phi.dim != psi.dim || phi.p != psi.p)
    throw std::invalid_argument("star: cochains on different algebras");
  size_t n = phi.dim;
  uint32_t p = phi.p;
  Cochain3 out = Cochain3::zero(p, n);
  Fp F(p);
  for (size_t k = 2; k < n; ++k)
    for (size_t j = 1; j < k; ++j)
      for (size_t i = 0; i < j; ++i) {
        // phi(psi(x,y),z) + phi(psi(z,x),y) + phi(psi(y,z),x)
        Vec v(n, 0);
        auto accum = [&](const Vec& inner, size_t basis_arg) {
          for (size_t t = 0; t < n; ++t) {
            if (!inner[t]) continue;
            Vec val = phi.eval_basis(t, basis_arg);
            vec_add_scaled(p, v, inner[t], val);
          }
        };
        accum(psi.at(i, j), k);
        accum(vec_scale(p, F.neg(1), psi.at(i, k)), j);
        accum(psi.at(j, k), i);
        out.at(i, j, k) = std::move(v);
      }
  return out;
}

namespace {

// common weight of a set of (source degrees, value vector) cells
std::optional<int> common_weight(const GradedAlgebra& G,
                                 const std::vector<std::pair<int, const Vec*>>& cells) {
  std::optional<int> w;
  for (const auto& [base, vp] : cells) {
    const Vec& v = *vp;
    for (size_t t = 0; t < v.size(); ++t) {
      if (!v[t]) continue;
      int s = G.degree[t] - base;
      if (w && *w != s) return std::nullopt;
      w = s;
    }
  }
  return w;
}

} // namespace

std::optional<int> cochain_weight(const GradedAlgebra& G, const Cochain2& psi) {
  std::vector<std::pair<int, const Vec*>> cells;
  size_t n = psi.dim;
  for (size_t j = 1; j < n; ++j)
    for (size_t i = 0; i < j; ++i)
      cells.emplace_back(G.degree[i] + G.degree[j], &psi.at(i, j));
  return common_weight(G, cells);
}

std::optional<int> cochain_weight(const GradedAlgebra& G, const Cochain1& phi) {
  std::vector<std::pair<int, const Vec*>> cells;
  for (size_t i = 0; i < phi.dim; ++i) cells.emplace_back(G.degree[i], &phi.values[i]);
  return common_weight(G, cells);
}

std::optional<int> cochain_weight(const GradedAlgebra& G, const Cochain3& psi) {
  std::vector<std::pair<int, const Vec*>> cells;
  size_t n = psi.dim;
  for (size_t k = 2; k < n; ++k)
    for (size_t j = 1; j < k; ++j)
      for (size_t i = 0; i < j; ++i)
        cells.emplace_back(G.degree[i] + G.degree[j] + G.degree[k], &psi.at(i, j, k));
  return common_weight(G, cells);
}

std::map<int, Cochain2> decompose_deformation(const LieAlgebra& deformed,
                                              const GradedAlgebra& graded) {
  const LieAlgebra& B = graded.algebra;
  if (deformed.dim() != B.dim() || deformed.p() != B.p())
    throw std::invalid_argument("decompose_deformation: brackets on different bases");
  size_t n = B.dim();
  uint32_t p = B.p();
  Fp F(p);
  std::map<int, Cochain2> psis;
  for (size_t j = 1; j < n; ++j)
    for (size_t i = 0; i < j; ++i) {
      Vec diff(n, 0);
      for (const Term& t : deformed.basis_bracket(i, j)) diff[t.k] = F.add(diff[t.k], t.c);
      for (const Term& t : B.basis_bracket(i, j)) diff[t.k] = F.sub(diff[t.k], t.c);
      int base = graded.degree[i] + graded.degree[j];
      for (size_t t = 0; t < n; ++t) {
        if (!diff[t]) continue;
        int s = graded.degree[t] - base;
        if (s <= 0)
          throw std::invalid_argument(
              "decompose_deformation: difference has a component of weight " +
              std::to_string(s) + " (not a filtered deformation)");
        auto [it, fresh] = psis.try_emplace(s, Cochain2::zero(p, n));
        it->second.at(i, j)[t] = diff[t];
      }
    }
  // reassembly identity: bracket + sum of components = deformed bracket
  for (size_t j = 1; j < n; ++j)
    for (size_t i = 0; i < j; ++i) {
      Vec acc(n, 0);
      for (const Term& t : B.basis_bracket(i, j)) acc[t.k] = F.add(acc[t.k], t.c);
      for (const auto& [s, psi] : psis) acc = vec_add(p, acc, psi.at(i, j));
      Vec expect(n, 0);
      for (const Term& t : deformed.basis_bracket(i, j)) expect[t.k] = t.c;
      if (!(acc == expect)) throw std::logic_error("decompose_deformation: reassembly failed");
    }
  return psis;
}

MaurerCartanReport check_maurer_cartan(const GradedAlgebra& G,
                                       const std::map<int, Cochain2>& psis) {
  MaurerCartanReport rep;
  size_t n = G.algebra.dim();
  uint32_t p = G.algebra.p();
  int smax = 0;
  for (const auto& [s, psi] : psis) smax = std::max(smax, s);
  for (int s = 1; s <= 2 * smax; ++s) {
    Cochain3 residual = Cochain3::zero(p, n);
    auto it = psis.find(s);
    if (it != psis.end()) residual = coboundary2(G.algebra, it->second);
    for (const auto& [i, psi_i] : psis) {
      if (i >= s) break;
      auto jt = psis.find(s - i);
      if (jt == psis.end()) continue;
      residual = add(residual, star(psi_i, jt->second));
    }
    bool zero = residual.is_zero();
    rep.residual_zero[s] = zero;
    if (!zero && rep.all_zero) {
      rep.all_zero = false;
      rep.first_failure = s;
    }
  }
  return rep;
}

std::map<uint32_t, Subspace> torus_root_spaces(const LieAlgebra& L, const Vec& t) {
  size_t n = L.dim();
  uint32_t p = L.p();
  Mat adt = L.ad(t);
  std::map<uint32_t, Subspace> roots;
  size_t covered = 0;
  for (uint32_t lambda = 0; lambda < p; ++lambda) {
    Mat shifted = adt;
    Fp F(p);
    for (size_t i = 0; i < n; ++i) shifted.at(i, i) = F.sub(shifted.at(i, i), lambda);
    Mat ker = kernel_basis(shifted);
    if (ker.rows == 0) continue;
    Subspace E = Subspace::from_rref(std::move(ker));
    covered += E.dim();
    roots.emplace(lambda, std::move(E));
  }
  if (covered != n)
    throw std::invalid_argument("torus_root_spaces: ad(t) is not diagonalizable over GF(p); " +
                                std::to_string(n - covered) + " dimensions unaccounted for");
  return roots;
}

std::map<uint32_t, Cochain2> torus_weight_components(const LieAlgebra& L, const Vec& t,
                                                     const Cochain2& psi) {
  size_t n = L.dim();
  uint32_t p = L.p();
  auto roots = torus_root_spaces(L, t);

  // projection matrices onto each root space
  std::vector<uint32_t> classes;
  std::vector<Vec> eig_rows;
  for (const auto& [lambda, E] : roots)
    for (size_t r = 0; r < E.dim(); ++r) {
      classes.push_back(lambda);
      eig_rows.push_back(E.basis_vector(r));
    }
  Mat eig = Mat::from_rows(p, eig_rows);
  std::map<uint32_t, Mat> proj;
  for (const auto& [lambda, E] : roots) proj.emplace(lambda, Mat(p, n, n));
  for (size_t col = 0; col < n; ++col) {
    Vec coords;
    if (!solve_in_rowspace(eig, unit_vec(n, col), coords))
      throw std::logic_error("torus_weight_components: eigenbasis does not span");
    for (size_t r = 0; r < coords.size(); ++r) {
      if (!coords[r]) continue;
      Mat& P = proj.at(classes[r]);
      for (size_t i = 0; i < n; ++i)
        P.at(i, col) = static_cast<uint32_t>(
            (P.at(i, col) + static_cast<uint64_t>(coords[r]) * eig_rows[r][i]) % p);
    }
  }

  std::map<uint32_t, Cochain2> comps;
  for (uint32_t mu = 0; mu < p; ++mu) {
    Cochain2 c = Cochain2::zero(p, n);
    bool nonzero = false;
    for (size_t j = 1; j < n; ++j)
      for (size_t i = 0; i < j; ++i) {
        Vec v(n, 0);
        for (const auto& [la, Pa] : proj)
          for (const auto& [lb, Pb] : proj) {
            uint32_t target = (la + lb + mu) % p;
            auto pt = proj.find(target);
            if (pt == proj.end()) continue;
            Vec val = psi.eval(mat_apply(Pa, unit_vec(n, i)), mat_apply(Pb, unit_vec(n, j)));
            v = vec_add(p, v, mat_apply(pt->second, val));
          }
        if (!vec_is_zero(v)) nonzero = true;
        c.at(i, j) = std::move(v);
      }
    if (nonzero || mu == 0) comps.emplace(mu, std::move(c));
  }
  return comps;
}

CochainCellSpace intersect(const CochainCellSpace& a, const CochainCellSpace& b) {
  if (a.dim != b.dim) throw std::invalid_argument("cell space intersection: shape mismatch");
  CochainCellSpace out;
  out.dim = a.dim;
  std::set_intersection(a.cells.begin(), a.cells.end(), b.cells.begin(), b.cells.end(),
                        std::back_inserter(out.cells));
  return out;
}

CochainCellSpace torus_invariant_cells(const GradedAlgebra& G) {
  size_t n = G.algebra.dim();
  int p = static_cast<int>(G.algebra.p());
  CochainCellSpace out;
  out.dim = n;
  for (size_t j = 1; j < n; ++j)
    for (size_t i = 0; i < j; ++i)
      for (size_t t = 0; t < n; ++t) {
        int w = G.degree[t] - G.degree[i] - G.degree[j];
        if (((w % p) + p) % p == 0)
          out.cells.push_back(Cochain2::pair_index(i, j) * n + t);
      }
  std::sort(out.cells.begin(), out.cells.end());
  return out;
}

CochainCellSpace graded_weight_cells(const GradedAlgebra& G, int k) {
  size_t n = G.algebra.dim();
  CochainCellSpace out;
  out.dim = n;
  for (size_t j = 1; j < n; ++j)
    for (size_t i = 0; i < j; ++i)
      for (size_t t = 0; t < n; ++t)
        if (G.degree[t] - G.degree[i] - G.degree[j] == k)
          out.cells.push_back(Cochain2::pair_index(i, j) * n + t);
  std::sort(out.cells.begin(), out.cells.end());
  return out;
}

bool weight_vanishing_check(const GradedAlgebra& G, uint32_t k) {
  if (k < 1 || k >= G.algebra.p())
    throw std::invalid_argument("weight_vanishing_check: requires 1 <= k < p");
  CochainCellSpace inv = torus_invariant_cells(G);
  CochainCellSpace ck = graded_weight_cells(G, static_cast<int>(k));
  return intersect(inv, ck).space_dim() == 0;
}

} // namespace nilsum
