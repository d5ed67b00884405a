#include "nilsum/poly.hpp"

#include <sstream>

namespace nilsum {

PolyAlgebra::PolyAlgebra(uint32_t p, uint32_t m, uint64_t budget) : p_(p), m_(m) {
  Fp(p); // the modulus must be prime
  uint64_t d = 1;
  for (uint32_t i = 0; i < m; ++i) {
    d *= p;
    if (d > budget) throw BudgetExceeded("PolyAlgebra", d, budget);
  }
  dim_ = static_cast<size_t>(d);
}

size_t PolyAlgebra::mono_index(const std::vector<uint32_t>& exps) const {
  if (exps.size() != m_) throw std::invalid_argument("mono_index: wrong arity");
  size_t idx = 0;
  size_t stride = 1;
  for (uint32_t i = 0; i < m_; ++i) {
    if (exps[i] >= p_) throw std::invalid_argument("mono_index: exponent out of range");
    idx += exps[i] * stride;
    stride *= p_;
  }
  return idx;
}

std::vector<uint32_t> PolyAlgebra::exponents(size_t idx) const {
  std::vector<uint32_t> e(m_);
  for (uint32_t i = 0; i < m_; ++i) {
    e[i] = static_cast<uint32_t>(idx % p_);
    idx /= p_;
  }
  return e;
}

Vec PolyAlgebra::one() const {
  Vec f(dim_, 0);
  f[0] = 1;
  return f;
}

Vec PolyAlgebra::monomial(const std::vector<uint32_t>& exps) const {
  Vec f(dim_, 0);
  f[mono_index(exps)] = 1;
  return f;
}

Vec PolyAlgebra::socle() const {
  Vec f(dim_, 0);
  f[socle_index()] = 1;
  return f;
}

Vec PolyAlgebra::mul(const Vec& f, const Vec& g) const {
  if (f.size() != dim_ || g.size() != dim_) throw std::invalid_argument("PolyAlgebra::mul: size");
  Vec out(dim_, 0);
  for (size_t a = 0; a < dim_; ++a) {
    if (!f[a]) continue;
    std::vector<uint32_t> ea = exponents(a);
    for (size_t b = 0; b < dim_; ++b) {
      if (!g[b]) continue;
      std::vector<uint32_t> eb = exponents(b);
      bool truncated = false;
      size_t idx = 0;
      size_t stride = 1;
      for (uint32_t i = 0; i < m_; ++i) {
        uint32_t s = ea[i] + eb[i];
        if (s >= p_) {
          truncated = true;
          break;
        }
        idx += s * stride;
        stride *= p_;
      }
      if (truncated) continue;
      out[idx] = static_cast<uint32_t>((out[idx] + static_cast<uint64_t>(f[a]) * g[b]) % p_);
    }
  }
  return out;
}

Vec PolyAlgebra::pow(const Vec& f, uint64_t e) const {
  Vec r = one();
  Vec b = f;
  while (e) {
    if (e & 1) r = mul(r, b);
    e >>= 1;
    if (e) b = mul(b, b);
  }
  return r;
}

Vec PolyAlgebra::dpartial(uint32_t var, const Vec& f) const {
  if (var >= m_) throw std::invalid_argument("dpartial: variable out of range");
  Vec out(dim_, 0);
  size_t stride = 1;
  for (uint32_t i = 0; i < var; ++i) stride *= p_;
  for (size_t a = 0; a < dim_; ++a) {
    if (!f[a]) continue;
    uint32_t e = static_cast<uint32_t>(a / stride % p_);
    if (e == 0) continue;
    out[a - stride] = static_cast<uint32_t>((out[a - stride] + static_cast<uint64_t>(e) * f[a]) % p_);
  }
  return out;
}

Mat PolyAlgebra::mult_op(const Vec& f) const {
  Mat op(p_, dim_, dim_);
  for (size_t b = 0; b < dim_; ++b) {
    Vec col = mul(f, monomial(exponents(b)));
    for (size_t i = 0; i < dim_; ++i) op.at(i, b) = col[i];
  }
  return op;
}

std::string PolyAlgebra::mono_label(size_t idx) const {
  std::vector<uint32_t> e = exponents(idx);
  std::ostringstream os;
  bool any = false;
  for (uint32_t i = 0; i < m_; ++i) {
    if (!e[i]) continue;
    if (any) os << "*";
    any = true;
    os << "x" << (i + 1);
    if (e[i] > 1) os << "^" << e[i];
  }
  return any ? os.str() : "1";
}

std::string PolyAlgebra::to_string(const Vec& f) const {
  std::ostringstream os;
  bool any = false;
  for (size_t a = 0; a < dim_; ++a) {
    if (!f[a]) continue;
    if (any) os << " + ";
    any = true;
    if (f[a] != 1 || a == 0) os << f[a];
    if (a != 0) {
      if (f[a] != 1) os << "*";
      os << mono_label(a);
    }
  }
  return any ? os.str() : "0";
}

Vec apply(const PolyAlgebra& O, const Derivation& d, const Vec& f) {
  if (d.components.size() != O.vars()) throw std::invalid_argument("apply: wrong component count");
  Vec out = O.zero();
  for (uint32_t i = 0; i < O.vars(); ++i) {
    Vec part = O.mul(d.components[i], O.dpartial(i, f));
    out = vec_add(O.p(), out, part);
  }
  return out;
}

Mat derivation_op(const PolyAlgebra& O, const Derivation& d) {
  Mat op(O.p(), O.dim(), O.dim());
  for (size_t b = 0; b < O.dim(); ++b) {
    Vec col = apply(O, d, O.monomial(O.exponents(b)));
    for (size_t i = 0; i < O.dim(); ++i) op.at(i, b) = col[i];
  }
  return op;
}

Derivation derivation_from_op(const PolyAlgebra& O, const Mat& op) {
  Derivation d;
  d.components.resize(O.vars());
  for (uint32_t i = 0; i < O.vars(); ++i) {
    std::vector<uint32_t> e(O.vars(), 0);
    e[i] = 1;
    d.components[i] = mat_apply(op, O.monomial(e)); // image of the generator x_{i+1}
  }
  if (!(derivation_op(O, d) == op))
    throw std::invalid_argument("derivation_from_op: operator violates the Leibniz rule");
  return d;
}

Derivation pth_power(const PolyAlgebra& O, const Derivation& d) {
  Mat op = derivation_op(O, d);
  return derivation_from_op(O, mat_pow(op, O.p()));
}

std::optional<size_t> derivation_nilpotency_order(const PolyAlgebra& O, const Derivation& d) {
  // a nilpotent operator on a dim-n space has index at most n
  Mat op = derivation_op(O, d);
  Mat power = op;
  for (size_t k = 1; k <= O.dim(); ++k) {
    if (power.is_zero()) return k;
    power = mat_mul(power, op);
  }
  return std::nullopt;
}

bool is_nilpotent_derivation(const PolyAlgebra& O, const Derivation& d) {
  return mat_pow(derivation_op(O, d), O.dim()).is_zero();
}

} // namespace nilsum
