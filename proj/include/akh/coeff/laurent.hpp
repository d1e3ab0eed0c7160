#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "akh/coeff/rational.hpp"

namespace akh {

// Variables of the symbolic coefficient ring: q, Q1..Q6 and v (a square
// root of q used by tensor space).
constexpr int kNumVars = 8;
constexpr int kVarQ = 0;
constexpr int kVarV = 7;
constexpr int kMaxSymbolicR = 6;

inline std::string var_name(int i) {
  if (i == kVarQ) return "q";
  if (i == kVarV) return "v";
  return "Q" + std::to_string(i);
}

using Exps = std::array<std::int16_t, kNumVars>;

inline int total_degree(const Exps& e) {
  int d = 0;
  for (auto x : e) d += x;
  return d;
}

// Graded lexicographic order (variable 0 most significant within a degree).
inline bool grlex_less(const Exps& a, const Exps& b) {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

inline Exps exps_add(const Exps& a, const Exps& b) {
  Exps r{};
  for (int i = 0; i < kNumVars; ++i) r[i] = static_cast<std::int16_t>(a[i] + b[i]);
  return r;
}
inline Exps exps_sub(const Exps& a, const Exps& b) {
  Exps r{};
  for (int i = 0; i < kNumVars; ++i) r[i] = static_cast<std::int16_t>(a[i] - b[i]);
  return r;
}

// Laurent polynomial in q, Q1..Q6, v with rational coefficients.  Terms are
// kept sorted ascending in grlex, without zero coefficients.
class LPoly {
 public:
  struct Term {
    Exps e{};
    Rational c;
  };

  LPoly() = default;
  LPoly(long c) : LPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  LPoly(const Rational& c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) t_.push_back({Exps{}, c});
  }
  static LPoly monomial(const Exps& e, const Rational& c = Rational(1)) {
    LPoly p;
    if (!c.is_zero()) p.t_.push_back({e, c});
    return p;
  }
  static LPoly var(int i, int power = 1) {
    Exps e{};
    e[i] = static_cast<std::int16_t>(power);
    return monomial(e);
  }

  const std::vector<Term>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].e == Exps{}); }
  Rational constant_term() const {
    for (const auto& t : t_)
      if (t.e == Exps{}) return t.c;
    return Rational(0);
  }
  const Term& lead() const { return t_.back(); }
  bool uses_var(int i) const {
    for (const auto& t : t_)
      if (t.e[i] != 0) return true;
    return false;
  }
  Exps min_exps() const {
    Exps m{};
    if (t_.empty()) return m;
    m = t_[0].e;
    for (const auto& t : t_)
      for (int i = 0; i < kNumVars; ++i) m[i] = std::min(m[i], t.e[i]);
    return m;
  }

  LPoly operator-() const {
    LPoly r = *this;
    for (auto& t : r.t_) t.c = -t.c;
    return r;
  }
  friend LPoly operator+(const LPoly& a, const LPoly& b) { return merge(a, b, false); }
  friend LPoly operator-(const LPoly& a, const LPoly& b) { return merge(a, b, true); }
  friend LPoly operator*(const LPoly& a, const LPoly& b) {
    if (a.is_zero() || b.is_zero()) return LPoly();
    if (b.t_.size() == 1) return a.mul_term(b.t_[0].e, b.t_[0].c);
    if (a.t_.size() == 1) return b.mul_term(a.t_[0].e, a.t_[0].c);
    std::vector<Term> all;
    all.reserve(a.t_.size() * b.t_.size());
    for (const auto& x : a.t_)
      for (const auto& y : b.t_) all.push_back({exps_add(x.e, y.e), x.c * y.c});
    return from_unsorted(std::move(all));
  }
  LPoly& operator+=(const LPoly& o) { return *this = *this + o; }
  LPoly& operator-=(const LPoly& o) { return *this = *this - o; }
  LPoly& operator*=(const LPoly& o) { return *this = *this * o; }
  friend bool operator==(const LPoly& a, const LPoly& b) {
    if (a.t_.size() != b.t_.size()) return false;
    for (std::size_t i = 0; i < a.t_.size(); ++i)
      if (a.t_[i].e != b.t_[i].e || a.t_[i].c != b.t_[i].c) return false;
    return true;
  }
  friend bool operator!=(const LPoly& a, const LPoly& b) { return !(a == b); }
  // Arbitrary but fixed total order, used to sort factor lists.
  friend bool operator<(const LPoly& a, const LPoly& b) {
    if (a.t_.size() != b.t_.size()) return a.t_.size() < b.t_.size();
    for (std::size_t i = 0; i < a.t_.size(); ++i) {
      if (a.t_[i].e != b.t_[i].e) return grlex_less(a.t_[i].e, b.t_[i].e);
      if (a.t_[i].c != b.t_[i].c) return a.t_[i].c < b.t_[i].c;
    }
    return false;
  }

  LPoly mul_term(const Exps& e, const Rational& c) const {
    LPoly r;
    if (c.is_zero()) return r;
    r.t_.reserve(t_.size());
    for (const auto& t : t_) r.t_.push_back({exps_add(t.e, e), t.c * c});
    return r;  // grlex is a monomial order, so order is preserved
  }

  // If f divides *this exactly (in the Laurent ring), stores the quotient.
  // f must be a polynomial that no variable divides.
  bool divides_by(const LPoly& f, LPoly* quotient) const {
    if (f.is_zero()) return false;
    if (is_zero()) { *quotient = LPoly(); return true; }
    Exps shift = min_exps();
    LPoly r = mul_term(exps_sub(Exps{}, shift), Rational(1));
    const Term& lf = f.lead();
    int df = total_degree(lf.e);
    Rational inv = lf.c.inv();
    std::vector<Term> q;
    while (!r.is_zero()) {
      const Term& lr = r.lead();
      if (total_degree(lr.e) < df) return false;
      Exps d = exps_sub(lr.e, lf.e);
      for (auto x : d)
        if (x < 0) return false;
      Rational c = lr.c * inv;
      q.push_back({d, c});
      r = r - f.mul_term(d, c);
    }
    LPoly qq = from_unsorted(std::move(q));
    *quotient = qq.mul_term(shift, Rational(1));
    return true;
  }

  template <class F>
  F evaluate(const std::vector<F>& vals) const {
    F acc(0);
    for (const auto& t : t_) {
      F term = from_rational<F>(t.c);
      for (int i = 0; i < kNumVars; ++i) {
        int k = t.e[i];
        if (k == 0) continue;
        if (i >= static_cast<int>(vals.size())) throw DomainError("no value for variable " + var_name(i));
        F base = vals[i];
        if (k < 0) {
          if (base.is_zero()) throw DomainError("specialization pole at factor " + var_name(i));
          base = F(1) / base;
          k = -k;
        }
        F p(1);
        for (int j = 0; j < k; ++j) p = p * base;
        term = term * p;
      }
      acc = acc + term;
    }
    return acc;
  }

  template <class F>
  static F from_rational(const Rational& c) {
    if (c.is_integer()) {
      require(c.num().fits_slong_p(), "coefficient too large for specialization");
      return F(c.num().get_si());
    }
    require(c.num().fits_slong_p() && c.den().fits_slong_p(), "coefficient too large for specialization");
    return F(c.num().get_si()) / F(c.den().get_si());
  }

  // Terms printed by ascending degree, q before Q1 before Q2 within a degree.
  std::string str() const {
    if (t_.empty()) return "0";
    std::vector<Term> s = t_;
    std::stable_sort(s.begin(), s.end(), [](const Term& a, const Term& b) {
      int da = total_degree(a.e), db = total_degree(b.e);
      if (da != db) return da < db;
      return b.e < a.e;
    });
    std::string out;
    for (const auto& t : s) {
      std::string cs = t.c.str();
      bool neg = cs[0] == '-';
      std::string mag = neg ? cs.substr(1) : cs;
      std::string mono;
      for (int i = 0; i < kNumVars; ++i) {
        if (t.e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += var_name(i);
        if (t.e[i] != 1) mono += "^" + std::to_string(t.e[i]);
      }
      std::string term;
      if (mono.empty()) term = mag;
      else term = (mag == "1") ? mono : mag + "*" + mono;
      if (out.empty()) out = neg ? "-" + term : term;
      else out += (neg ? "-" : "+") + term;
    }
    return out;
  }

  static LPoly from_unsorted(std::vector<Term> v) {
    std::sort(v.begin(), v.end(), [](const Term& a, const Term& b) { return grlex_less(a.e, b.e); });
    LPoly r;
    for (auto& t : v) {
      if (!r.t_.empty() && r.t_.back().e == t.e) r.t_.back().c += t.c;
      else {
        if (!r.t_.empty() && r.t_.back().c.is_zero()) r.t_.pop_back();
        r.t_.push_back(std::move(t));
      }
    }
    if (!r.t_.empty() && r.t_.back().c.is_zero()) r.t_.pop_back();
    return r;
  }

 private:
  static LPoly merge(const LPoly& a, const LPoly& b, bool subtract) {
    LPoly r;
    r.t_.reserve(a.t_.size() + b.t_.size());
    std::size_t i = 0, j = 0;
    while (i < a.t_.size() || j < b.t_.size()) {
      if (j == b.t_.size() || (i < a.t_.size() && grlex_less(a.t_[i].e, b.t_[j].e))) {
        r.t_.push_back(a.t_[i++]);
      } else if (i == a.t_.size() || grlex_less(b.t_[j].e, a.t_[i].e)) {
        r.t_.push_back(b.t_[j++]);
        if (subtract) r.t_.back().c = -r.t_.back().c;
      } else {
        Rational c = subtract ? a.t_[i].c - b.t_[j].c : a.t_[i].c + b.t_[j].c;
        if (!c.is_zero()) r.t_.push_back({a.t_[i].e, c});
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::vector<Term> t_;
};

}  // namespace akh
