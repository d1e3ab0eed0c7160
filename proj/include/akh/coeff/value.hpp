#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "akh/coeff/cyclotomic.hpp"
#include "akh/coeff/modp.hpp"
#include "akh/coeff/rational.hpp"
#include "akh/errors.hpp"

namespace akh {

// field = "QQ" | "GF(p)" | "cyclo(e)".
struct FieldSpec {
  enum class Kind { kRationals, kPrime, kCyclotomic };
  Kind kind = Kind::kRationals;
  std::uint32_t p = 0;
  int e = 0;

  std::string str() const {
    switch (kind) {
      case Kind::kRationals: return "QQ";
      case Kind::kPrime: return "GF(" + std::to_string(p) + ")";
      case Kind::kCyclotomic: return "cyclo(" + std::to_string(e) + ")";
    }
    return "?";
  }
};

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

namespace detail {

inline std::string trim(std::string s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  return s;
}

inline long parse_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    throw DomainError("malformed integer in " + what + ": '" + s + "'");
  }
  if (used != s.size()) throw DomainError("malformed integer in " + what + ": '" + s + "'");
  return v;
}

}  // namespace detail

inline FieldSpec parse_field(const std::string& text) {
  std::string s = detail::trim(text);
  FieldSpec f;
  if (s == "QQ") return f;
  auto inner = [&](const std::string& head) -> std::string {
    if (s.rfind(head + "(", 0) != 0 || s.back() != ')') return {};
    return s.substr(head.size() + 1, s.size() - head.size() - 2);
  };
  if (auto a = inner("GF"); !a.empty()) {
    long p = detail::parse_int(a, "field");
    if (p <= 1 || p >= (1L << 31) || !is_prime(static_cast<std::uint64_t>(p))) throw DomainError("GF(p) needs a prime p < 2^31, got " + a);
    f.kind = FieldSpec::Kind::kPrime;
    f.p = static_cast<std::uint32_t>(p);
    return f;
  }
  if (auto a = inner("cyclo"); !a.empty()) {
    long e = detail::parse_int(a, "field");
    if (e < 1 || e > 64) throw DomainError("cyclo(e) needs 1 <= e <= 64");
    f.kind = FieldSpec::Kind::kCyclotomic;
    f.e = static_cast<int>(e);
    return f;
  }
  throw DomainError("unknown field '" + text + "' (expected QQ, GF(p) or cyclo(e))");
}

// Values: "a", "a/b"; in cyclotomic mode also "zeta", "zeta^k", "-zeta^k".
template <class F>
F parse_value(const std::string& text, const FieldSpec& f);

template <>
inline Rational parse_value<Rational>(const std::string& text, const FieldSpec& f) {
  require(f.kind == FieldSpec::Kind::kRationals, "field mismatch");
  return Rational::parse(detail::trim(text));
}

template <>
inline ModP parse_value<ModP>(const std::string& text, const FieldSpec& f) {
  require(f.kind == FieldSpec::Kind::kPrime, "field mismatch");
  Rational r = Rational::parse(detail::trim(text));
  mpz_class p(f.p);
  mpz_class num = r.num() % p, den = r.den() % p;
  if (num < 0) num += p;
  if (den == 0) throw DomainError("denominator of '" + text + "' vanishes in " + f.str());
  return ModP(f.p, static_cast<long>(num.get_si())) / ModP(f.p, static_cast<long>(den.get_si()));
}

template <>
inline Cyclo parse_value<Cyclo>(const std::string& text, const FieldSpec& f) {
  require(f.kind == FieldSpec::Kind::kCyclotomic, "field mismatch");
  std::string s = detail::trim(text);
  bool neg = false;
  if (!s.empty() && s.front() == '-' && s.find("zeta") != std::string::npos) {
    neg = true;
    s = detail::trim(s.substr(1));
  }
  if (s.rfind("zeta", 0) == 0) {
    long k = 1;
    std::string rest = s.substr(4);
    if (!rest.empty()) {
      if (rest.front() != '^') throw DomainError("malformed value '" + text + "' (expected zeta^k)");
      k = detail::parse_int(rest.substr(1), "zeta power");
    }
    Cyclo z = Cyclo::zeta_power(f.e, k);
    return neg ? -z : z;
  }
  return Cyclo::bind(Cyclo(Rational::parse(s)), f.e);
}

inline std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      out.push_back(detail::trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!detail::trim(cur).empty() || !out.empty()) out.push_back(detail::trim(cur));
  return out;
}

template <class F>
std::vector<F> parse_values(const std::string& text, const FieldSpec& f) {
  std::vector<F> out;
  for (const auto& s : split_list(text)) out.push_back(parse_value<F>(s, f));
  return out;
}

// Smallest k ≥ 1 with q^k = 1, or 0 if none up to the bound (e = ∞).
template <class F>
int multiplicative_order(const F& q, int bound = 64) {
  if (q.is_zero()) throw DomainError("q must be invertible");
  F x = q;
  for (int k = 1; k <= bound; ++k) {
    if (x == F(1)) return k;
    x = x * q;
  }
  return 0;
}

}  // namespace akh
