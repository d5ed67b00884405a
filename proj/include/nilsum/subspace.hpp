#pragma once

#include "nilsum/mat.hpp"

#include <compare>
#include <optional>

namespace nilsum {

/// Subspace of GF(p)^n held in canonical form: the basis matrix is the
/// unique RREF of the row space with zero rows removed. Two subspaces are
/// equal iff their basis matrices are identical, which makes equality,
/// ordering and hashing structural.
class Subspace {
public:
  Subspace() = default;

  static Subspace zero(uint32_t p, size_t ambient) {
    Subspace s;
    s.basis_ = Mat(p, 0, ambient);
    return s;
  }

  static Subspace full(uint32_t p, size_t ambient) {
    Subspace s;
    s.basis_ = Mat::identity(p, ambient);
    return s;
  }

  /// Span of the rows of `gens` (need not be independent).
  static Subspace span(const Mat& gens);
  static Subspace span(uint32_t p, size_t ambient, const std::vector<Vec>& gens);

  /// Adopts `m` as-is; m must already be RREF with no zero rows.
  static Subspace from_rref(Mat m) {
    Subspace s;
    s.basis_ = std::move(m);
    return s;
  }

  uint32_t p() const { return basis_.p; }
  size_t ambient_dim() const { return basis_.cols; }
  size_t dim() const { return basis_.rows; }
  const Mat& basis() const { return basis_; }
  Vec basis_vector(size_t i) const { return basis_.row_vec(i); }

  bool is_zero() const { return basis_.rows == 0; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;

  /// Canonical coset representative: v with all pivot coordinates of this
  /// subspace eliminated. reduce(v) == 0 iff v lies in the subspace.
  Vec reduce(Vec v) const;

  /// Coordinates of v in this basis; nullopt if v is outside the subspace.
  std::optional<Vec> coordinates(const Vec& v) const;

  bool operator==(const Subspace& o) const { return basis_ == o.basis_; }

  /// Canonical total order: by dimension, then entry-lexicographic.
  std::strong_ordering operator<=>(const Subspace& o) const;

private:
  Mat basis_; // RREF, no zero rows
};

Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersect(const Subspace& u, const Subspace& v);

/// dim(u + v) without materializing the sum.
size_t sum_dim(const Subspace& u, const Subspace& v);

} // namespace nilsum
