#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "akh/errors.hpp"

namespace akh {

inline bool is_prime_u64(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Element of GF(p), p < 2^31.  Integer constants created without a modulus
// (ModP(0), ModP(1), ...) stay "unbound" small rationals until they meet a
// bound element; this lets generic code write F(1) without a field handle.
class ModP {
 public:
  static constexpr std::uint64_t kMaxPrime = (1ULL << 31);

  ModP() = default;
  ModP(long v) : num_(v) {}  // NOLINT(google-explicit-constructor)
  ModP(std::uint32_t p, long v) : p_(p) {
    require(p >= 2 && p < kMaxPrime && is_prime_u64(p), "GF(p) needs a prime p < 2^31");
    long m = v % static_cast<long>(p);
    if (m < 0) m += p;
    num_ = m;
  }

  std::uint32_t prime() const { return p_; }
  bool bound() const { return p_ != 0; }
  std::uint32_t residue() const { return static_cast<std::uint32_t>(num_); }

  bool is_zero() const { return num_ == 0; }

  ModP inv() const {
    if (is_zero()) throw DomainError("division by zero");
    if (!bound()) return unbound(den_, num_);
    return ModP::raw(p_, powmod(num_, p_ - 2, p_));
  }

  ModP operator-() const {
    if (!bound()) return unbound(-num_, den_);
    return raw(p_, num_ == 0 ? 0 : p_ - num_);
  }
  friend ModP operator+(const ModP& a, const ModP& b) {
    std::uint32_t p = common(a, b);
    if (p == 0) return unbound(checked_add(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)), checked_mul(a.den_, b.den_));
    ModP x = bind(a, p), y = bind(b, p);
    std::uint64_t s = static_cast<std::uint64_t>(x.num_) + y.num_;
    return raw(p, s >= p ? s - p : s);
  }
  friend ModP operator-(const ModP& a, const ModP& b) { return a + (-b); }
  friend ModP operator*(const ModP& a, const ModP& b) {
    std::uint32_t p = common(a, b);
    if (p == 0) return unbound(checked_mul(a.num_, b.num_), checked_mul(a.den_, b.den_));
    ModP x = bind(a, p), y = bind(b, p);
    return raw(p, static_cast<std::uint64_t>(x.num_) * static_cast<std::uint64_t>(y.num_) % p);
  }
  friend ModP operator/(const ModP& a, const ModP& b) { return a * b.inv(); }
  ModP& operator+=(const ModP& o) { return *this = *this + o; }
  ModP& operator-=(const ModP& o) { return *this = *this - o; }
  ModP& operator*=(const ModP& o) { return *this = *this * o; }
  ModP& operator/=(const ModP& o) { return *this = *this / o; }

  friend bool operator==(const ModP& a, const ModP& b) {
    std::uint32_t p = common(a, b);
    if (p == 0) return a.num_ == b.num_ && a.den_ == b.den_;
    return bind(a, p).num_ == bind(b, p).num_;
  }
  friend bool operator!=(const ModP& a, const ModP& b) { return !(a == b); }

  std::string str() const {
    if (!bound()) return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    return std::to_string(num_);
  }

  // Reinterprets an unbound constant inside GF(p).
  static ModP bind(const ModP& a, std::uint32_t p) {
    if (a.bound() || p == 0) return a;
    long n = a.num_ % static_cast<long>(p);
    if (n < 0) n += p;
    long d = a.den_ % static_cast<long>(p);
    if (d < 0) d += p;
    if (d == 0) throw DomainError("constant denominator vanishes in GF(" + std::to_string(p) + ")");
    return raw(p, static_cast<std::uint64_t>(n) * powmod(d, p - 2, p) % p);
  }

 private:
  static ModP raw(std::uint32_t p, std::uint64_t v) {
    ModP r;
    r.p_ = p;
    r.num_ = static_cast<long>(v);
    return r;
  }
  static ModP unbound(long n, long d) {
    if (d == 0) throw DomainError("division by zero");
    if (d < 0) { n = -n; d = -d; }
    long g = std::gcd(n, d);
    if (g > 1) { n /= g; d /= g; }
    ModP r;
    r.num_ = n;
    r.den_ = d;
    return r;
  }
  static std::uint32_t common(const ModP& a, const ModP& b) {
    if (a.p_ && b.p_ && a.p_ != b.p_) throw DomainError("mode mismatch: GF(" + std::to_string(a.p_) + ") vs GF(" + std::to_string(b.p_) + ")");
    return a.p_ ? a.p_ : b.p_;
  }
  static std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    b %= m;
    while (e) {
      if (e & 1) r = r * b % m;
      b = b * b % m;
      e >>= 1;
    }
    return r;
  }
  static long checked_mul(long a, long b) {
    long r;
    if (__builtin_mul_overflow(a, b, &r)) throw DomainError("unbound prime-field constant overflow");
    return r;
  }
  static long checked_add(long a, long b) {
    long r;
    if (__builtin_add_overflow(a, b, &r)) throw DomainError("unbound prime-field constant overflow");
    return r;
  }

  std::uint32_t p_ = 0;
  long num_ = 0;
  long den_ = 1;  // only meaningful while unbound
};

}  // namespace akh
