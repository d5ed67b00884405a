#include "nilsum/mat.hpp"

#include <sstream>

namespace nilsum {

Mat Mat::from_rows(uint32_t p, const std::vector<Vec>& rows) {
  size_t c = rows.empty() ? 0 : rows.front().size();
  Mat m(p, rows.size(), c);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("Mat::from_rows: ragged rows");
    m.set_row(i, rows[i]);
  }
  return m;
}

size_t rref_in_place(Mat& m) {
  Fp F(m.p);
  size_t r = 0; // next pivot row
  for (size_t col = 0; col < m.cols && r < m.rows; ++col) {
    size_t piv = r;
    while (piv < m.rows && m.at(piv, col) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != r)
      for (size_t j = col; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    uint32_t s = F.inv(m.at(r, col));
    for (size_t j = col; j < m.cols; ++j) m.at(r, j) = F.mul(s, m.at(r, j));
    for (size_t i = 0; i < m.rows; ++i) {
      if (i == r) continue;
      uint32_t f = m.at(i, col);
      if (!f) continue;
      for (size_t j = col; j < m.cols; ++j)
        m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(r, j)));
    }
    ++r;
  }
  return r;
}

Mat rref(const Mat& m, size_t* rank) {
  Mat out = m;
  size_t r = rref_in_place(out);
  if (rank) *rank = r;
  return out;
}

size_t rank_of(const Mat& m) {
  Mat t = m;
  return rref_in_place(t);
}

Mat mat_mul(const Mat& x, const Mat& y) {
  if (x.cols != y.rows || x.p != y.p) throw std::invalid_argument("mat_mul: shape/field mismatch");
  Mat out(x.p, x.rows, y.cols);
  for (size_t i = 0; i < x.rows; ++i)
    for (size_t k = 0; k < x.cols; ++k) {
      uint64_t f = x.at(i, k);
      if (!f) continue;
      for (size_t j = 0; j < y.cols; ++j)
        out.at(i, j) = static_cast<uint32_t>((out.at(i, j) + f * y.at(k, j)) % x.p);
    }
  return out;
}

Mat mat_pow(const Mat& x, uint64_t e) {
  if (x.rows != x.cols) throw std::invalid_argument("mat_pow: square matrix required");
  Mat r = Mat::identity(x.p, x.rows);
  Mat b = x;
  while (e) {
    if (e & 1) r = mat_mul(r, b);
    e >>= 1;
    if (e) b = mat_mul(b, b);
  }
  return r;
}

Mat mat_add(const Mat& x, const Mat& y) {
  if (x.rows != y.rows || x.cols != y.cols || x.p != y.p)
    throw std::invalid_argument("mat_add: shape/field mismatch");
  Fp F(x.p);
  Mat out = x;
  for (size_t i = 0; i < out.a.size(); ++i) out.a[i] = F.add(out.a[i], y.a[i]);
  return out;
}

Mat mat_sub(const Mat& x, const Mat& y) {
  if (x.rows != y.rows || x.cols != y.cols || x.p != y.p)
    throw std::invalid_argument("mat_sub: shape/field mismatch");
  Fp F(x.p);
  Mat out = x;
  for (size_t i = 0; i < out.a.size(); ++i) out.a[i] = F.sub(out.a[i], y.a[i]);
  return out;
}

Mat transpose(const Mat& m) {
  Mat out(m.p, m.cols, m.rows);
  for (size_t i = 0; i < m.rows; ++i)
    for (size_t j = 0; j < m.cols; ++j) out.at(j, i) = m.at(i, j);
  return out;
}

Vec mat_apply(const Mat& m, const Vec& v) {
  if (v.size() != m.cols) throw std::invalid_argument("apply: dimension mismatch");
  Vec out(m.rows, 0);
  for (size_t i = 0; i < m.rows; ++i) {
    uint64_t acc = 0;
    for (size_t j = 0; j < m.cols; ++j) acc += static_cast<uint64_t>(m.at(i, j)) * v[j];
    out[i] = static_cast<uint32_t>(acc % m.p);
  }
  return out;
}

Mat kernel_basis(const Mat& m) {
  // Solve m v = 0 by echelonizing and back-filling free coordinates.
  size_t rank = 0;
  Mat r = rref(m, &rank);
  Fp F(m.p);
  std::vector<size_t> pivot_col;
  std::vector<bool> is_pivot(m.cols, false);
  for (size_t i = 0; i < rank; ++i) {
    size_t j = 0;
    while (j < m.cols && r.at(i, j) == 0) ++j;
    pivot_col.push_back(j);
    is_pivot[j] = true;
  }
  Mat out(m.p, m.cols - rank, m.cols);
  size_t row = 0;
  for (size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    out.at(row, free) = 1;
    for (size_t i = 0; i < rank; ++i)
      out.at(row, pivot_col[i]) = F.neg(r.at(i, free));
    ++row;
  }
  rref_in_place(out); // canonical form
  return out;
}

bool solve_in_rowspace(const Mat& rows, const Vec& target, Vec& coeffs) {
  if (target.size() != rows.cols) throw std::invalid_argument("solve_in_rowspace: dimension mismatch");
  // Augment [rows^T | target] and eliminate.
  Mat aug(rows.p, rows.cols, rows.rows + 1);
  for (size_t i = 0; i < rows.rows; ++i)
    for (size_t j = 0; j < rows.cols; ++j) aug.at(j, i) = rows.at(i, j);
  for (size_t j = 0; j < rows.cols; ++j) aug.at(j, rows.rows) = target[j];
  rref_in_place(aug);
  coeffs.assign(rows.rows, 0);
  for (size_t i = 0; i < aug.rows; ++i) {
    size_t j = 0;
    while (j < aug.cols && aug.at(i, j) == 0) ++j;
    if (j == aug.cols) continue;
    if (j == rows.rows) return false; // pivot in the target column: inconsistent
    coeffs[j] = aug.at(i, rows.rows);
  }
  return true;
}

Mat invert(const Mat& m) {
  if (m.rows != m.cols) throw std::domain_error("invert: square matrix required");
  Mat aug(m.p, m.rows, 2 * m.cols);
  for (size_t i = 0; i < m.rows; ++i) {
    for (size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols + i) = 1;
  }
  rref_in_place(aug);
  // singular iff the left block fails to reduce to the identity
  for (size_t i = 0; i < m.rows; ++i)
    for (size_t j = 0; j < m.cols; ++j)
      if (aug.at(i, j) != (i == j ? 1u : 0u)) throw std::domain_error("invert: singular matrix");
  Mat out(m.p, m.rows, m.cols);
  for (size_t i = 0; i < m.rows; ++i)
    for (size_t j = 0; j < m.cols; ++j) out.at(i, j) = aug.at(i, m.cols + j);
  return out;
}

Vec vec_add(uint32_t p, const Vec& x, const Vec& y) {
  Fp F(p);
  Vec out(x.size());
  for (size_t i = 0; i < x.size(); ++i) out[i] = F.add(x[i], y[i]);
  return out;
}

Vec vec_sub(uint32_t p, const Vec& x, const Vec& y) {
  Fp F(p);
  Vec out(x.size());
  for (size_t i = 0; i < x.size(); ++i) out[i] = F.sub(x[i], y[i]);
  return out;
}

Vec vec_scale(uint32_t p, uint32_t c, const Vec& x) {
  Fp F(p);
  Vec out(x.size());
  for (size_t i = 0; i < x.size(); ++i) out[i] = F.mul(c, x[i]);
  return out;
}

void vec_add_scaled(uint32_t p, Vec& x, uint32_t c, const Vec& y) {
  for (size_t i = 0; i < x.size(); ++i)
    x[i] = static_cast<uint32_t>((x[i] + static_cast<uint64_t>(c) * y[i]) % p);
}

bool vec_is_zero(const Vec& x) {
  for (uint32_t v : x)
    if (v) return false;
  return true;
}

Vec unit_vec(size_t n, size_t i) {
  Vec v(n, 0);
  v[i] = 1;
  return v;
}

std::string to_string(const Mat& m) {
  std::ostringstream os;
  for (size_t i = 0; i < m.rows; ++i) {
    os << (i ? "\n[" : "[");
    for (size_t j = 0; j < m.cols; ++j) os << (j ? " " : "") << m.at(i, j);
    os << "]";
  }
  return os.str();
}

} // namespace nilsum
