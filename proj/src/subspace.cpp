#include "nilsum/subspace.hpp"

namespace nilsum {

Subspace Subspace::span(const Mat& gens) {
  size_t rank = 0;
  Mat r = rref(gens, &rank);
  Mat b(gens.p, rank, gens.cols);
  for (size_t i = 0; i < rank; ++i) b.set_row(i, r.row(i));
  return from_rref(std::move(b));
}

Subspace Subspace::span(uint32_t p, size_t ambient, const std::vector<Vec>& gens) {
  if (gens.empty()) return zero(p, ambient);
  return span(Mat::from_rows(p, gens));
}

Vec Subspace::reduce(Vec v) const {
  if (v.size() != ambient_dim()) throw std::invalid_argument("Subspace::reduce: ambient mismatch");
  Fp F(p());
  for (size_t i = 0; i < basis_.rows; ++i) {
    size_t piv = 0;
    while (piv < basis_.cols && basis_.at(i, piv) == 0) ++piv;
    uint32_t c = v[piv];
    if (!c) continue;
    for (size_t j = piv; j < basis_.cols; ++j) v[j] = F.sub(v[j], F.mul(c, basis_.at(i, j)));
  }
  return v;
}

bool Subspace::contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim() != ambient_dim() || other.p() != p())
    throw std::invalid_argument("Subspace::contains: ambient mismatch");
  if (other.dim() > dim()) return false;
  for (size_t i = 0; i < other.basis_.rows; ++i)
    if (!contains(other.basis_.row_vec(i))) return false;
  return true;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  Vec coeffs;
  if (!solve_in_rowspace(basis_, v, coeffs)) return std::nullopt;
  return coeffs;
}

std::strong_ordering Subspace::operator<=>(const Subspace& o) const {
  if (auto c = dim() <=> o.dim(); c != 0) return c;
  for (size_t i = 0; i < basis_.a.size(); ++i)
    if (auto c = basis_.a[i] <=> o.basis_.a[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

Subspace sum(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim() || u.p() != v.p())
    throw std::invalid_argument("sum: ambient mismatch");
  Mat stacked(u.p(), u.dim() + v.dim(), u.ambient_dim());
  for (size_t i = 0; i < u.dim(); ++i) stacked.set_row(i, u.basis().row(i));
  for (size_t i = 0; i < v.dim(); ++i) stacked.set_row(u.dim() + i, v.basis().row(i));
  return Subspace::span(stacked);
}

size_t sum_dim(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim() || u.p() != v.p())
    throw std::invalid_argument("sum_dim: ambient mismatch");
  Mat stacked(u.p(), u.dim() + v.dim(), u.ambient_dim());
  for (size_t i = 0; i < u.dim(); ++i) stacked.set_row(i, u.basis().row(i));
  for (size_t i = 0; i < v.dim(); ++i) stacked.set_row(u.dim() + i, v.basis().row(i));
  return rref_in_place(stacked);
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim() || u.p() != v.p())
    throw std::invalid_argument("intersect: ambient mismatch");
  // Zassenhaus: echelonize [U U; V 0]; rows with zero left half carry the
  // intersection in their right half.
  size_t n = u.ambient_dim();
  Mat block(u.p(), u.dim() + v.dim(), 2 * n);
  for (size_t i = 0; i < u.dim(); ++i)
    for (size_t j = 0; j < n; ++j) {
      block.at(i, j) = u.basis().at(i, j);
      block.at(i, n + j) = u.basis().at(i, j);
    }
  for (size_t i = 0; i < v.dim(); ++i)
    for (size_t j = 0; j < n; ++j) block.at(u.dim() + i, j) = v.basis().at(i, j);
  size_t rank = rref_in_place(block);
  std::vector<Vec> rows;
  for (size_t i = 0; i < rank; ++i) {
    bool left_zero = true;
    for (size_t j = 0; j < n; ++j)
      if (block.at(i, j)) {
        left_zero = false;
        break;
      }
    if (!left_zero) continue;
    Vec r(n);
    for (size_t j = 0; j < n; ++j) r[j] = block.at(i, n + j);
    rows.push_back(std::move(r));
  }
  return Subspace::span(u.p(), n, rows);
}

} // namespace nilsum
