#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nilsum {

/// Prime field GF(p) context. Element values are residues in [0, p).
/// The modulus is carried by the context, never by a global, so several
/// characteristics can coexist in one run.
class Fp {
public:
  explicit Fp(uint32_t p) : p_(p) {
    if (!is_prime(p))
      throw std::invalid_argument("Fp: modulus " + std::to_string(p) + " is not prime");
  }

  uint32_t modulus() const { return p_; }

  uint32_t add(uint32_t a, uint32_t b) const {
    uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }

  uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p_ - b; }

  uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }

  uint32_t mul(uint32_t a, uint32_t b) const {
    return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p_);
  }

  uint32_t pow(uint32_t a, uint64_t e) const {
    uint32_t r = 1 % p_;
    uint32_t base = a % p_;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }

  /// Multiplicative inverse. Zero has none; that is a caller error.
  uint32_t inv(uint32_t a) const {
    if (a % p_ == 0) throw std::domain_error("Fp::inv: zero is not invertible");
    return pow(a, p_ - 2);
  }

  /// Reduce an arbitrary signed integer into [0, p).
  uint32_t reduce(int64_t v) const {
    int64_t r = v % static_cast<int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<uint32_t>(r);
  }

  static bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

private:
  uint32_t p_;
};

/// Thrown when an enumeration or scan would exceed its configured budget.
/// Raised before any work is done, never mid-stream.
class BudgetExceeded : public std::runtime_error {
public:
  BudgetExceeded(const std::string& what, uint64_t required, uint64_t budget)
      : std::runtime_error(what + ": requires " + std::to_string(required) +
                           " units, budget is " + std::to_string(budget)),
        required_(required), budget_(budget) {}
  uint64_t required() const { return required_; }
  uint64_t budget() const { return budget_; }

private:
  uint64_t required_;
  uint64_t budget_;
};

} // namespace nilsum
