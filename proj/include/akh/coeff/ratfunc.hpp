#pragma once

#include <string>
#include <utility>
#include <vector>

#include "akh/coeff/cyclotomic.hpp"
#include "akh/coeff/laurent.hpp"

namespace akh {

// Splits p = unit * prim, where unit is a rational times a Laurent monomial
// and prim is a polynomial with coprime integer coefficients, positive
// leading coefficient and no monomial factor.
inline std::pair<LPoly, LPoly> split_unit(const LPoly& p) {
  require(!p.is_zero(), "split_unit of zero");
  Exps shift = p.min_exps();
  mpz_class g = 0, l = 1;
  for (const auto& t : p.terms()) {
    g = gcd(g, t.c.num());
    l = lcm(l, t.c.den());
  }
  Rational content(mpq_class(g, l));
  if (p.lead().c.sign() < 0) content = -content;
  LPoly prim = p.mul_term(exps_sub(Exps{}, shift), content.inv());
  LPoly unit = LPoly::monomial(shift, content);
  return {unit, prim};
}

// Splits a primitive polynomial into coarse factors.  Univariate factors are
// broken into cyclotomic pieces; anything else is kept whole.
inline std::vector<std::pair<LPoly, int>> coarse_factors(const LPoly& prim) {
  std::vector<std::pair<LPoly, int>> out;
  if (prim.is_constant()) return out;
  int var = -1, nvars = 0;
  for (int i = 0; i < kNumVars; ++i)
    if (prim.uses_var(i)) { var = i; ++nvars; }
  if (nvars != 1) {
    out.push_back({prim, 1});
    return out;
  }
  LPoly rest = prim;
  int deg = 0;
  for (const auto& t : prim.terms()) deg = std::max(deg, static_cast<int>(t.e[var]));
  for (int m = 1; m <= 2 * deg * deg + 2 && !rest.is_constant(); ++m) {
    const auto& phi = cyclotomic_polynomial(m);
    if (phi.degree() > deg) continue;
    LPoly f;
    for (int k = 0; k <= phi.degree(); ++k) f += LPoly::var(var, k) * LPoly(phi.coeff(k));
    int mult = 0;
    LPoly quot;
    while (rest.divides_by(f, &quot)) {
      rest = quot;
      ++mult;
    }
    if (mult) out.push_back({split_unit(f).second, mult});
  }
  if (!rest.is_constant()) out.push_back({split_unit(rest).second, 1});
  else ensure(rest == LPoly(1), "coarse_factors lost a unit");
  return out;
}

// Element of the fraction field Q(q, Q1..Q6, v): a Laurent numerator over a
// product of primitive polynomial factors.  Factors that divide the
// numerator are cancelled after every operation.
class RatFunc {
 public:
  using Factor = std::pair<LPoly, int>;

  RatFunc() = default;
  RatFunc(long c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Rational& c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  RatFunc(LPoly p) : num_(std::move(p)) {}  // NOLINT(google-explicit-constructor)

  static RatFunc var(int i, int power = 1) { return RatFunc(LPoly::var(i, power)); }

  const LPoly& num() const { return num_; }
  const std::vector<Factor>& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }

  LPoly den_product() const {
    LPoly d(1);
    for (const auto& [f, e] : den_)
      for (int k = 0; k < e; ++k) d = d * f;
    return d;
  }

  RatFunc operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) { return add(a, b, false); }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return add(a, b, true); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    RatFunc r;
    r.num_ = a.num_ * b.num_;
    r.den_ = merge_factors(a.den_, b.den_);
    if (!a.den_.empty() || !b.den_.empty()) r.cancel();
    return r;
  }
  RatFunc inv() const {
    if (is_zero()) throw DomainError("division by zero");
    auto [unit, prim] = split_unit(num_);
    // unit is c*m; its inverse is (1/c)*m^{-1}.
    const auto& ut = unit.terms()[0];
    LPoly unit_inv = LPoly::monomial(exps_sub(Exps{}, ut.e), ut.c.inv());
    RatFunc r;
    r.num_ = den_product() * unit_inv;
    r.den_ = normalize_factors(coarse_factors(prim));
    r.cancel();
    return r;
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inv(); }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return a.num_ == b.num_;
    return (a - b).is_zero();
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  // Value at the given variable assignment (vals indexed like the
  // variables; missing trailing entries are an error only if used).
  template <class F>
  F evaluate(const std::vector<F>& vals) const {
    F d(1);
    for (const auto& [f, e] : den_) {
      F fv = f.evaluate(vals);
      if (fv.is_zero()) throw DomainError("specialization pole at factor (" + f.str() + ")");
      for (int k = 0; k < e; ++k) d = d * fv;
    }
    return num_.evaluate(vals) / d;
  }

  std::string str() const {
    if (num_.is_zero()) return "0";
    // Pull negative powers out of the numerator into the printed denominator.
    Exps m = num_.min_exps();
    Exps neg{};
    bool has_neg = false;
    for (int i = 0; i < kNumVars; ++i)
      if (m[i] < 0) { neg[i] = static_cast<std::int16_t>(-m[i]); has_neg = true; }
    LPoly top = has_neg ? num_.mul_term(neg, Rational(1)) : num_;
    if (!has_neg && den_.empty()) return top.str();
    std::vector<std::string> parts;
    std::string mono = LPoly::monomial(neg).str();
    for (const auto& [f, e] : den_) {
      std::string fs = f.terms().size() > 1 ? "(" + f.str() + ")" : f.str();
      parts.push_back(e == 1 ? fs : fs + "^" + std::to_string(e));
    }
    if (has_neg) parts.push_back(mono);
    std::string den;
    for (const auto& p : parts) den += (den.empty() ? "" : "*") + p;
    std::string ts = top.terms().size() > 1 ? "(" + top.str() + ")" : top.str();
    if (parts.size() > 1 || den.find('*') != std::string::npos) den = "(" + den + ")";
    return ts + "/" + den;
  }

 private:
  static std::vector<Factor> normalize_factors(std::vector<Factor> fs) {
    std::sort(fs.begin(), fs.end(), [](const Factor& a, const Factor& b) { return a.first < b.first; });
    std::vector<Factor> out;
    for (auto& f : fs) {
      if (!out.empty() && out.back().first == f.first) out.back().second += f.second;
      else out.push_back(std::move(f));
    }
    return out;
  }
  static std::vector<Factor> merge_factors(const std::vector<Factor>& a, const std::vector<Factor>& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    std::vector<Factor> all = a;
    all.insert(all.end(), b.begin(), b.end());
    return normalize_factors(std::move(all));
  }
  static RatFunc add(const RatFunc& a, const RatFunc& b, bool subtract) {
    if (a.den_ == b.den_) {
      RatFunc r;
      r.num_ = subtract ? a.num_ - b.num_ : a.num_ + b.num_;
      if (r.num_.is_zero()) return RatFunc();
      r.den_ = a.den_;
      if (!r.den_.empty()) r.cancel();
      return r;
    }
    if (a.is_zero()) return subtract ? -b : b;
    if (b.is_zero()) return a;
    // lcm of the two factor lists, with cofactors.
    std::vector<Factor> l;
    LPoly ca(1), cb(1);
    std::size_t i = 0, j = 0;
    auto pw = [](const LPoly& f, int k) {
      LPoly p(1);
      for (int t = 0; t < k; ++t) p = p * f;
      return p;
    };
    while (i < a.den_.size() || j < b.den_.size()) {
      if (j == b.den_.size() || (i < a.den_.size() && a.den_[i].first < b.den_[j].first)) {
        l.push_back(a.den_[i]);
        cb = cb * pw(a.den_[i].first, a.den_[i].second);
        ++i;
      } else if (i == a.den_.size() || b.den_[j].first < a.den_[i].first) {
        l.push_back(b.den_[j]);
        ca = ca * pw(b.den_[j].first, b.den_[j].second);
        ++j;
      } else {
        int ea = a.den_[i].second, eb = b.den_[j].second;
        l.push_back({a.den_[i].first, std::max(ea, eb)});
        if (ea < eb) ca = ca * pw(a.den_[i].first, eb - ea);
        if (eb < ea) cb = cb * pw(b.den_[j].first, ea - eb);
        ++i;
        ++j;
      }
    }
    RatFunc r;
    r.num_ = subtract ? a.num_ * ca - b.num_ * cb : a.num_ * ca + b.num_ * cb;
    if (r.num_.is_zero()) return RatFunc();
    r.den_ = std::move(l);
    r.cancel();
    return r;
  }
  void cancel() {
    if (num_.is_zero()) { den_.clear(); return; }
    std::vector<Factor> kept;
    for (auto& [f, e] : den_) {
      LPoly quot;
      while (e > 0 && num_.divides_by(f, &quot)) {
        num_ = std::move(quot);
        --e;
      }
      if (e > 0) kept.push_back({f, e});
    }
    den_ = std::move(kept);
  }

  LPoly num_;
  std::vector<Factor> den_;
};

}  // namespace akh
