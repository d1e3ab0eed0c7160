#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include "akh/errors.hpp"

namespace akh {

class Rational {
 public:
  Rational() = default;
  Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den) {
    require(den != 0, "division by zero");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
  explicit Rational(const mpz_class& z) : v_(z) {}

  // Accepts "a", "-a", "a/b".
  static Rational parse(std::string_view s) {
    std::string str(s);
    while (!str.empty() && str.front() == ' ') str.erase(str.begin());
    while (!str.empty() && str.back() == ' ') str.pop_back();
    if (str.empty()) throw DomainError("empty rational literal");
    if (str.front() == '+') str.erase(str.begin());
    for (char c : str)
      if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-'))
        throw DomainError("malformed rational literal '" + std::string(s) + "'");
    mpq_class v;
    if (v.set_str(str, 10) != 0) throw DomainError("malformed rational literal '" + std::string(s) + "'");
    if (v.get_den() == 0) throw DomainError("division by zero in literal '" + std::string(s) + "'");
    v.canonicalize();
    return Rational(v);
  }

  const mpq_class& value() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational inv() const {
    if (is_zero()) throw DomainError("division by zero");
    mpq_class r = 1 / v_;
    return Rational(r);
  }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    v_ /= o.v_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

  std::string str() const { return v_.get_str(); }

 private:
  mpq_class v_;
};

inline Rational pow(Rational b, long e) {
  if (e < 0) { b = b.inv(); e = -e; }
  Rational r(1);
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

}  // namespace akh
