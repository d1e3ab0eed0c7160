#pragma once

#include <limits>
#include <tuple>
#include <string>
#include <utility>
#include <vector>

#include "akh/errors.hpp"

namespace akh {

// Dense univariate polynomial over a field F; c[i] is the coefficient of x^i.
template <class F>
class UPoly {
 public:
  UPoly() = default;
  UPoly(const F& c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) c_.push_back(c);
  }
  UPoly(long c) : UPoly(F(c)) {}  // NOLINT(google-explicit-constructor)
  explicit UPoly(std::vector<F> c) : c_(std::move(c)) { trim(); }

  static UPoly x() { return monomial(F(1), 1); }
  static UPoly monomial(const F& c, int k) {
    std::vector<F> v(k + 1, F(0));
    v[k] = c;
    return UPoly(std::move(v));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<F>& coeffs() const { return c_; }
  F coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : F(0); }
  const F& lead() const { return c_.back(); }

  UPoly operator-() const {
    UPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }
  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<F> v(std::max(a.c_.size(), b.c_.size()), F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] = v[i] + b.c_[i];
    return UPoly(std::move(v));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<F> v(a.c_.size() + b.c_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(v));
  }
  UPoly& operator+=(const UPoly& o) { return *this = *this + o; }
  UPoly& operator-=(const UPoly& o) { return *this = *this - o; }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }
  friend bool operator==(const UPoly& a, const UPoly& b) { return (a - b).is_zero(); }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  // Euclidean division: a = q*b + r with deg r < deg b.
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<F> r = a.c_;
    int db = b.degree();
    if (a.degree() < db) return {UPoly(), a};
    std::vector<F> q(a.degree() - db + 1, F(0));
    F inv_lead = F(1) / b.lead();
    for (int k = a.degree(); k >= db; --k) {
      if (r[k].is_zero()) continue;
      F f = r[k] * inv_lead;
      q[k - db] = f;
      for (int j = 0; j <= db; ++j) r[k - db + j] = r[k - db + j] - f * b.c_[j];
    }
    r.resize(db);
    return {UPoly(std::move(q)), UPoly(std::move(r))};
  }

  UPoly monic() const {
    if (is_zero()) return *this;
    F inv = F(1) / lead();
    UPoly r = *this;
    for (auto& v : r.c_) v = v * inv;
    return r;
  }

  static UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
      UPoly r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  // Returns (g, s, t) with s*a + t*b = g monic.
  static std::tuple<UPoly, UPoly, UPoly> ext_gcd(UPoly a, UPoly b) {
    UPoly s0(F(1)), s1, t0, t1(F(1));
    while (!b.is_zero()) {
      auto [q, r] = divmod(a, b);
      a = std::move(b);
      b = std::move(r);
      UPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
      s0 = std::move(s1); s1 = std::move(s2);
      t0 = std::move(t1); t1 = std::move(t2);
    }
    if (a.is_zero()) return {a, s0, t0};
    F inv = F(1) / a.lead();
    return {a * UPoly(inv), s0 * UPoly(inv), t0 * UPoly(inv)};
  }

  template <class G>
  G eval(const G& x) const {
    G r(0);
    for (int i = degree(); i >= 0; --i) r = r * x + G(c_[i]);
    return r;
  }
  F eval(const F& x) const {
    F r(0);
    for (int i = degree(); i >= 0; --i) r = r * x + c_[i];
    return r;
  }

  std::string str(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = 0; i <= degree(); ++i) {
      if (c_[i].is_zero()) continue;
      std::string cs = c_[i].str();
      bool neg = !cs.empty() && cs[0] == '-';
      std::string mag = neg ? cs.substr(1) : cs;
      bool complex_coeff = mag.find_first_of("+-*") != std::string::npos;
      if (complex_coeff) { neg = false; mag = "(" + cs + ")"; }
      std::string term;
      if (i == 0) term = mag;
      else {
        std::string pw = var + (i == 1 ? "" : "^" + std::to_string(i));
        term = (mag == "1") ? pw : mag + "*" + pw;
      }
      if (out.empty()) out = neg ? "-" + term : term;
      else out += (neg ? "-" : "+") + term;
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<F> c_;
};

// Reduced fraction of univariate polynomials over F with monic denominator.
template <class F>
class UFrac {
 public:
  using Poly = UPoly<F>;
  UFrac() : den_(F(1)) {}
  UFrac(long c) : num_(F(c)), den_(F(1)) {}  // NOLINT(google-explicit-constructor)
  UFrac(const F& c) : num_(c), den_(F(1)) {}  // NOLINT(google-explicit-constructor)
  UFrac(Poly n) : num_(std::move(n)), den_(F(1)) {}  // NOLINT(google-explicit-constructor)
  UFrac(Poly n, Poly d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

  static UFrac t() { return UFrac(Poly::x()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  UFrac operator-() const { return UFrac(-num_, den_, true); }
  friend UFrac operator+(const UFrac& a, const UFrac& b) {
    if (a.den_ == b.den_) return UFrac(a.num_ + b.num_, a.den_);
    return UFrac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend UFrac operator-(const UFrac& a, const UFrac& b) { return a + (-b); }
  friend UFrac operator*(const UFrac& a, const UFrac& b) {
    if (a.is_zero() || b.is_zero()) return UFrac();
    return UFrac(a.num_ * b.num_, a.den_ * b.den_);
  }
  UFrac inv() const {
    if (is_zero()) throw DomainError("division by zero");
    return UFrac(den_, num_);
  }
  friend UFrac operator/(const UFrac& a, const UFrac& b) { return a * b.inv(); }
  UFrac& operator+=(const UFrac& o) { return *this = *this + o; }
  UFrac& operator-=(const UFrac& o) { return *this = *this - o; }
  UFrac& operator*=(const UFrac& o) { return *this = *this * o; }
  UFrac& operator/=(const UFrac& o) { return *this = *this / o; }
  friend bool operator==(const UFrac& a, const UFrac& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const UFrac& a, const UFrac& b) { return !(a == b); }

  // Value at t = x; throws when the denominator vanishes.
  F eval(const F& x) const {
    F d = den_.eval(x);
    if (d.is_zero()) throw DomainError("specialization pole at factor (" + den_.str() + ")");
    return num_.eval(x) / d;
  }

  std::string str() const {
    if (den_.degree() == 0) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
  }

 private:
  UFrac(Poly n, Poly d, bool) : num_(std::move(n)), den_(std::move(d)) {}
  void normalize() {
    if (den_.is_zero()) throw DomainError("division by zero");
    if (num_.is_zero()) { den_ = Poly(F(1)); return; }
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = Poly::divmod(num_, g).first;
      den_ = Poly::divmod(den_, g).first;
    }
    F l = den_.lead();
    if (!(l == F(1))) {
      F inv = F(1) / l;
      num_ = num_ * Poly(inv);
      den_ = den_ * Poly(inv);
    }
  }
  Poly num_;
  Poly den_;
};

// Largest k with (t-1)^k dividing p; p must be nonzero.
template <class F>
int valuation_t1_poly(const UPoly<F>& p) {
  if (p.is_zero()) throw DomainError("valuation of zero polynomial");
  const UPoly<F> tm1(std::vector<F>{F(-1), F(1)});
  UPoly<F> cur = p;
  int k = 0;
  while (true) {
    auto [q, r] = UPoly<F>::divmod(cur, tm1);
    if (!r.is_zero()) break;
    cur = std::move(q);
    ++k;
  }
  return k;
}

struct Valuation {
  bool infinite = false;
  int value = 0;
  friend bool operator==(const Valuation& a, const Valuation& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
  std::string str() const { return infinite ? "inf" : std::to_string(value); }
};

// (t-1)-adic valuation of an element of the localization at t = 1.
template <class F>
Valuation valuation_at_t1(const UFrac<F>& f) {
  if (f.is_zero()) return {true, 0};
  if (valuation_t1_poly(f.den()) > 0)
    throw DomainError("denominator divisible by (t-1): element outside the localization");
  return {false, valuation_t1_poly(f.num())};
}

}  // namespace akh

namespace akh {

// ord_(t-1)(num) - ord_(t-1)(den); defined for any nonzero fraction.
template <class F>
int signed_valuation_at_t1(const UFrac<F>& f) {
  if (f.is_zero()) throw DomainError("valuation of zero");
  return valuation_t1_poly(f.num()) - valuation_t1_poly(f.den());
}

}  // namespace akh
