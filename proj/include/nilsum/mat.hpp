#pragma once

#include "nilsum/fp.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace nilsum {

using Vec = std::vector<uint32_t>;

/// Dense row-major matrix over GF(p). All entries are kept reduced mod p.
struct Mat {
  uint32_t p = 2;
  size_t rows = 0;
  size_t cols = 0;
  std::vector<uint32_t> a;

  Mat() = default;
  Mat(uint32_t p_, size_t r, size_t c) : p(p_), rows(r), cols(c), a(r * c, 0) {}

  uint32_t& at(size_t i, size_t j) { return a[i * cols + j]; }
  uint32_t at(size_t i, size_t j) const { return a[i * cols + j]; }

  std::span<const uint32_t> row(size_t i) const { return {a.data() + i * cols, cols}; }
  Vec row_vec(size_t i) const { return Vec(a.begin() + i * cols, a.begin() + (i + 1) * cols); }
  void set_row(size_t i, std::span<const uint32_t> v) {
    for (size_t j = 0; j < cols; ++j) a[i * cols + j] = v[j];
  }

  static Mat identity(uint32_t p, size_t n) {
    Mat m(p, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static Mat from_rows(uint32_t p, const std::vector<Vec>& rows);

  bool operator==(const Mat& o) const {
    return p == o.p && rows == o.rows && cols == o.cols && a == o.a;
  }

  bool is_zero() const {
    for (uint32_t v : a)
      if (v) return false;
    return true;
  }
};

/// In-place reduced row echelon form. Returns the rank. The result is the
/// unique RREF of the row space: pivots are 1, pivot columns are otherwise
/// zero, pivot columns strictly increase down the rows, zero rows sink to
/// the bottom.
size_t rref_in_place(Mat& m);

Mat rref(const Mat& m, size_t* rank = nullptr);

size_t rank_of(const Mat& m);

Mat mat_mul(const Mat& x, const Mat& y);

Mat mat_pow(const Mat& x, uint64_t e);

Mat mat_add(const Mat& x, const Mat& y);

Mat mat_sub(const Mat& x, const Mat& y);

Mat transpose(const Mat& m);

Vec mat_apply(const Mat& m, const Vec& v); // m * v (v as column)

/// Basis of the right kernel {v : m v = 0}, one vector per row, in RREF.
Mat kernel_basis(const Mat& m);

/// Solve x * rows = target for x, where `rows` spans by rows. Returns false
/// if target is outside the row space; otherwise writes the coefficients.
bool solve_in_rowspace(const Mat& rows, const Vec& target, Vec& coeffs);

Mat invert(const Mat& m); // throws std::domain_error if singular

// small vector helpers (context p passed explicitly)
Vec vec_add(uint32_t p, const Vec& x, const Vec& y);
Vec vec_sub(uint32_t p, const Vec& x, const Vec& y);
Vec vec_scale(uint32_t p, uint32_t c, const Vec& x);
void vec_add_scaled(uint32_t p, Vec& x, uint32_t c, const Vec& y); // x += c*y
bool vec_is_zero(const Vec& x);
Vec unit_vec(size_t n, size_t i);

std::string to_string(const Mat& m);

} // namespace nilsum
