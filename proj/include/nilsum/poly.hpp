#pragma once

#include "nilsum/mat.hpp"

#include <optional>

namespace nilsum {

/// Truncated polynomial algebra O_m = GF(p)[x_1..x_m]/(x_1^p, ..., x_m^p).
/// Basis monomials are exponent vectors in {0..p-1}^m, indexed base p with
/// x_1 fastest. Elements are dense coefficient vectors of length p^m.
/// Multiplication truncates any monomial with an exponent reaching p to zero.
class PolyAlgebra {
public:
  PolyAlgebra(uint32_t p, uint32_t m, uint64_t budget = 1u << 20);

  uint32_t p() const { return p_; }
  uint32_t vars() const { return m_; }
  size_t dim() const { return dim_; }

  size_t mono_index(const std::vector<uint32_t>& exps) const;
  std::vector<uint32_t> exponents(size_t idx) const;

  Vec zero() const { return Vec(dim_, 0); }
  Vec one() const;
  Vec monomial(const std::vector<uint32_t>& exps) const;

  Vec mul(const Vec& f, const Vec& g) const;
  Vec pow(const Vec& f, uint64_t e) const;

  /// Partial derivative with respect to x_{var+1}, var in [0, m).
  Vec dpartial(uint32_t var, const Vec& f) const;

  uint32_t constant_term(const Vec& f) const { return f[0]; }

  /// Socle generator x_1^{p-1} ... x_m^{p-1}; it lies in every nonzero ideal.
  size_t socle_index() const { return dim_ - 1; }
  Vec socle() const;

  /// Operator matrix of multiplication by f.
  Mat mult_op(const Vec& f) const;

  std::string mono_label(size_t idx) const;
  std::string to_string(const Vec& f) const;

private:
  uint32_t p_;
  uint32_t m_;
  size_t dim_;
};

/// Derivation of O_m: f -> sum_i components[i] * df/dx_i.
struct Derivation {
  std::vector<Vec> components; // m coefficient vectors, one per d/dx_i
};

Vec apply(const PolyAlgebra& O, const Derivation& d, const Vec& f);

/// Operator matrix of the derivation acting on O_m.
Mat derivation_op(const PolyAlgebra& O, const Derivation& d);

/// Read a derivation back off its operator matrix via the generator images;
/// throws if the operator is not a derivation (Leibniz fails somewhere).
Derivation derivation_from_op(const PolyAlgebra& O, const Mat& op);

/// d^p as an operator composition; a derivation again in characteristic p.
Derivation pth_power(const PolyAlgebra& O, const Derivation& d);

/// Least k with d^k = 0 as an operator, or nullopt if d is not nilpotent.
std::optional<size_t> derivation_nilpotency_order(const PolyAlgebra& O, const Derivation& d);

bool is_nilpotent_derivation(const PolyAlgebra& O, const Derivation& d);

} // namespace nilsum
