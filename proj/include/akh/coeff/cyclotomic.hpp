#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "akh/coeff/rational.hpp"
#include "akh/coeff/upoly.hpp"

namespace akh {

// Phi_e(x) over Q; memoized, safe to call concurrently.
inline const UPoly<Rational>& cyclotomic_polynomial(int e) {
  static std::mutex mu;
  static std::map<int, UPoly<Rational>> table;
  require(e >= 1, "cyclotomic order must be >= 1");
  std::lock_guard<std::mutex> lock(mu);
  auto it = table.find(e);
  if (it != table.end()) return it->second;
  // Bottom-up construction over all divisors of e.
  std::vector<int> divs;
  for (int d = 1; d <= e; ++d)
    if (e % d == 0) divs.push_back(d);
  for (int d : divs) {
    if (table.count(d)) continue;
    std::vector<Rational> cd(d + 1, Rational(0));
    cd[0] = Rational(-1);
    cd[d] = Rational(1);
    UPoly<Rational> pd(cd);
    for (int d2 : divs)
      if (d2 < d && d % d2 == 0) pd = UPoly<Rational>::divmod(pd, table.at(d2)).first;
    table.emplace(d, pd);
  }
  return table.at(e);
}

// Element of Q(zeta_e) as a polynomial in zeta of degree < phi(e).  Values
// built from plain integers (Cyclo(1)) are unbound rationals until combined
// with a bound element.
class Cyclo {
 public:
  Cyclo() = default;
  Cyclo(long v) : c_{Rational(v)} {}  // NOLINT(google-explicit-constructor)
  Cyclo(const Rational& v) : c_{v} {}  // NOLINT(google-explicit-constructor)

  static Cyclo zeta_power(int e, long k) {
    const auto& phi = cyclotomic_polynomial(e);
    long m = ((k % e) + e) % e;
    UPoly<Rational> x = UPoly<Rational>::monomial(Rational(1), static_cast<int>(m));
    return from_poly(e, UPoly<Rational>::divmod(x, phi).second);
  }
  static Cyclo from_poly(int e, const UPoly<Rational>& p) {
    const auto& phi = cyclotomic_polynomial(e);
    UPoly<Rational> r = UPoly<Rational>::divmod(p, phi).second;
    Cyclo out;
    out.e_ = e;
    out.c_.assign(phi.degree(), Rational(0));
    for (int i = 0; i <= r.degree(); ++i) out.c_[i] = r.coeff(i);
    return out;
  }

  int order() const { return e_; }
  bool bound() const { return e_ != 0; }
  bool is_zero() const {
    for (const auto& v : c_)
      if (!v.is_zero()) return false;
    return true;
  }
  UPoly<Rational> poly() const { return UPoly<Rational>(c_); }

  Cyclo operator-() const {
    Cyclo r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }
  friend Cyclo operator+(const Cyclo& a, const Cyclo& b) {
    int e = common(a, b);
    if (e == 0) return Cyclo(a.constant() + b.constant());
    Cyclo x = bind(a, e), y = bind(b, e);
    for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
    return x;
  }
  friend Cyclo operator-(const Cyclo& a, const Cyclo& b) { return a + (-b); }
  friend Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    int e = common(a, b);
    if (e == 0) return Cyclo(a.constant() * b.constant());
    if (!a.bound()) return scale(bind(b, e), a.constant());
    if (!b.bound()) return scale(bind(a, e), b.constant());
    return from_poly(e, a.poly() * b.poly());
  }
  Cyclo inv() const {
    if (is_zero()) throw DomainError("division by zero");
    if (!bound()) return Cyclo(constant().inv());
    auto [g, s, t] = UPoly<Rational>::ext_gcd(poly(), cyclotomic_polynomial(e_));
    ensure(g.degree() == 0, "cyclotomic inverse: gcd not a unit");
    return from_poly(e_, s);
  }
  friend Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inv(); }
  Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
  Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
  Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }
  Cyclo& operator/=(const Cyclo& o) { return *this = *this / o; }
  friend bool operator==(const Cyclo& a, const Cyclo& b) { return (a - b).is_zero(); }
  friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

  std::string str() const {
    if (!bound()) return constant().str();
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      std::string cs = c_[i].str();
      bool neg = cs[0] == '-';
      std::string mag = neg ? cs.substr(1) : cs;
      std::string term;
      if (i == 0) term = mag;
      else {
        std::string pw = "zeta" + std::to_string(e_) + (i == 1 ? "" : "^" + std::to_string(i));
        term = mag == "1" ? pw : mag + "*" + pw;
      }
      if (out.empty()) out = neg ? "-" + term : term;
      else out += (neg ? "-" : "+") + term;
    }
    return out.empty() ? "0" : out;
  }

  static Cyclo bind(const Cyclo& a, int e) {
    if (a.bound() || e == 0) return a;
    Cyclo out;
    out.e_ = e;
    out.c_.assign(cyclotomic_polynomial(e).degree(), Rational(0));
    out.c_[0] = a.constant();
    return out;
  }

 private:
  Rational constant() const { return c_.empty() ? Rational(0) : c_[0]; }
  static Cyclo scale(Cyclo a, const Rational& k) {
    for (auto& v : a.c_) v *= k;
    return a;
  }
  static int common(const Cyclo& a, const Cyclo& b) {
    if (a.e_ && b.e_ && a.e_ != b.e_)
      throw DomainError("mode mismatch: cyclo(" + std::to_string(a.e_) + ") vs cyclo(" + std::to_string(b.e_) + ")");
    return a.e_ ? a.e_ : b.e_;
  }

  int e_ = 0;
  std::vector<Rational> c_{Rational(0)};
};

}  // namespace akh
