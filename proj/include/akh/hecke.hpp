#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "akh/combinatorics.hpp"

namespace akh {

// q^k for any integer k.
template <class F>
F power(const F& base, int k) {
  F b = base;
  if (k < 0) {
    if (b.is_zero()) throw DomainError("negative power of zero");
    b = F(1) / b;
    k = -k;
  }
  F out(1);
  for (int i = 0; i < k; ++i) out = out * b;
  return out;
}

template <class F>
struct HeckeParams {
  int r = 1;
  F q = F(1);
  std::vector<F> Q;  // Q[0] = Q_1

  F residue(int content, int s) const { return power(q, content) * Q.at(s - 1); }
  F residue(const Node& x) const { return residue(x.j - x.i, x.s); }
};

// P_H(q,Q) = ∏_{i≤n}(1+q+...+q^{i-1}) · ∏_{i<j} ∏_{|d|<n} (q^d Q_i − Q_j).
template <class F>
F p_hecke(const HeckeParams<F>& p, int n) {
  F out(1);
  for (int i = 1; i <= n; ++i) {
    F s(0);
    for (int k = 0; k < i; ++k) s += power(p.q, k);
    out = out * s;
  }
  for (int i = 1; i <= p.r; ++i)
    for (int j = i + 1; j <= p.r; ++j)
      for (int d = -n + 1; d < n; ++d) out = out * (power(p.q, d) * p.Q[i - 1] - p.Q[j - 1]);
  return out;
}

// Permutation tables for S_n; perms are ranked in lexicographic order of
// their one-line notation.
class SymTables {
 public:
  explicit SymTables(int n) : n_(n) {
    require(n >= 0 && n <= 8, "n out of supported range");
    Perm p = identity_perm(n);
    do {
      perms_.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    int N = size();
    length_.resize(N);
    inv_.resize(N);
    left_.assign(n, std::vector<std::uint32_t>(N));
    right_.assign(n, std::vector<std::uint32_t>(N));
    for (int w = 0; w < N; ++w) {
      const Perm& x = perms_[w];
      length_[w] = perm_length(x);
      inv_[w] = rank(perm_inverse(x));
      for (int i = 1; i < n; ++i) {
        Perm l = x;
        std::swap(l[i - 1], l[i]);
        left_[i][w] = rank(l);
        Perm r = x;
        for (auto& v : r) {
          if (v == i) v = i + 1;
          else if (v == i + 1) v = i;
        }
        right_[i][w] = rank(r);
      }
    }
  }

  int n() const { return n_; }
  int size() const { return static_cast<int>(perms_.size()); }
  const Perm& perm(std::uint32_t w) const { return perms_[w]; }
  int length(std::uint32_t w) const { return length_[w]; }
  std::uint32_t inverse(std::uint32_t w) const { return inv_[w]; }
  std::uint32_t left(int i, std::uint32_t w) const { return left_[i][w]; }    // s_i w
  std::uint32_t right(int i, std::uint32_t w) const { return right_[i][w]; }  // w s_i

  std::uint32_t rank(const Perm& p) const {
    std::uint32_t r = 0;
    for (int k = 0; k < n_; ++k) {
      int smaller = 0;
      for (int j = k + 1; j < n_; ++j)
        if (p[j] < p[k]) ++smaller;
      r = r * (n_ - k) + smaller;
    }
    return r;
  }

 private:
  int n_;
  std::vector<Perm> perms_;
  std::vector<int> length_;
  std::vector<std::uint32_t> inv_;
  std::vector<std::vector<std::uint32_t>> left_, right_;
};

// The Ariki-Koike algebra in the basis L_1^{a_1}...L_n^{a_n} T_w.
//
// Everything is computed with left multiplication by generators, which
// never pushes an exponent beyond r-1 except at L_1, where the relation
// ∏(L_1 − Q_s) = 0 applies.  For i ≥ 1 with X = L_i, Y = L_{i+1}:
//   T_i f(X,Y) = f(Y,X) T_i + (q−1) Y (f(X,Y) − f(Y,X)) / (Y − X).
// Right multiplication by T_0 goes through the anti-involution *.
template <class F>
class HeckeAlgebra {
 public:
  using Elem = std::map<std::uint32_t, F>;

  HeckeAlgebra(int r, int n, F q, std::vector<F> Q) : sym_(n), r_(r), n_(n) {
    require(r >= 1, "r must be >= 1");
    require(static_cast<int>(Q.size()) == r, "need exactly r values Q_s");
    require(!q.is_zero(), "q must be invertible");
    params_.r = r;
    params_.q = std::move(q);
    params_.Q = std::move(Q);
    nfact_ = static_cast<std::uint32_t>(sym_.size());
    acount_ = 1;
    for (int k = 0; k < n; ++k) acount_ *= static_cast<std::uint32_t>(r);
    // x^r = −Σ_{k<r} p_k x^k where ∏(x − Q_s) = Σ p_k x^k.
    std::vector<F> poly{F(1)};
    for (int s = 0; s < r; ++s) {
      std::vector<F> next(poly.size() + 1, F(0));
      for (std::size_t k = 0; k < poly.size(); ++k) {
        next[k + 1] += poly[k];
        next[k] -= params_.Q[s] * poly[k];
      }
      poly = std::move(next);
    }
    cap_.resize(r);
    for (int k = 0; k < r; ++k) cap_[k] = -poly[k];
    qm1_ = params_.q - F(1);
  }
  HeckeAlgebra(const HeckeParams<F>& p, int n) : HeckeAlgebra(p.r, n, p.q, p.Q) {}

  int r() const { return r_; }
  int n() const { return n_; }
  const HeckeParams<F>& params() const { return params_; }
  const F& q() const { return params_.q; }
  const SymTables& sym() const { return sym_; }
  std::uint32_t dim() const { return acount_ * nfact_; }
  std::uint32_t perm_count() const { return nfact_; }

  std::uint32_t key(std::uint32_t arank, std::uint32_t w) const { return arank * nfact_ + w; }
  std::uint32_t key(const std::vector<int>& a, const Perm& w) const { return key(a_rank(a), sym_.rank(w)); }
  std::uint32_t a_rank(const std::vector<int>& a) const {
    require(static_cast<int>(a.size()) == n_, "a-vector has wrong length");
    std::uint32_t x = 0;
    for (int v : a) {
      require(v >= 0 && v < r_, "a-vector entry out of range");
      x = x * r_ + v;
    }
    return x;
  }
  std::vector<int> a_vector(std::uint32_t arank) const {
    std::vector<int> a(n_);
    for (int k = n_ - 1; k >= 0; --k) {
      a[k] = static_cast<int>(arank % r_);
      arank /= r_;
    }
    return a;
  }
  std::pair<std::vector<int>, Perm> decode(std::uint32_t k) const {
    return {a_vector(k / nfact_), sym_.perm(k % nfact_)};
  }

  Elem one() const { return scalar(F(1)); }
  Elem scalar(const F& c) const {
    Elem e;
    if (!c.is_zero()) e.emplace(0, c);
    return e;
  }
  Elem monomial(const std::vector<int>& a, const Perm& w, const F& c = F(1)) const {
    Elem e;
    if (!c.is_zero()) e.emplace(key(a, w), c);
    return e;
  }
  Elem basis_element(std::uint32_t k) const { return Elem{{k, F(1)}}; }
  Elem generator(int i) const {
    require(i >= 0 && i < n_, "generator index out of range");
    if (i == 0) {
      std::vector<int> a(n_, 0);
      if (r_ == 1) return scalar(params_.Q[0]);
      a[0] = 1;
      return monomial(a, identity_perm(n_));
    }
    Perm w = identity_perm(n_);
    std::swap(w[i - 1], w[i]);
    return monomial(std::vector<int>(n_, 0), w);
  }
  Elem T(const Perm& w) const { return monomial(std::vector<int>(n_, 0), w); }

  // L_k as an element (a one-hot a-vector, or Q_1 when r = 1).
  Elem L(int k) const {
    require(k >= 1 && k <= n_, "L_k index out of range");
    return left_L(k, one());
  }

  static void add_to(Elem& e, std::uint32_t k, const F& c) {
    if (c.is_zero()) return;
    auto it = e.find(k);
    if (it == e.end()) {
      e.emplace(k, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) e.erase(it);
  }
  static Elem add(Elem a, const Elem& b) {
    for (const auto& [k, c] : b) add_to(a, k, c);
    return a;
  }
  static Elem sub(Elem a, const Elem& b) {
    for (const auto& [k, c] : b) add_to(a, k, -c);
    return a;
  }
  static Elem scale(const Elem& a, const F& s) {
    Elem out;
    if (s.is_zero()) return out;
    for (const auto& [k, c] : a) {
      F v = c * s;
      if (!v.is_zero()) out.emplace(k, v);
    }
    return out;
  }
  static bool equal(const Elem& a, const Elem& b) {
    if (a.size() != b.size()) return false;
    auto i = a.begin();
    auto j = b.begin();
    for (; i != a.end(); ++i, ++j)
      if (i->first != j->first || !(i->second == j->second)) return false;
    return true;
  }

  // ------------------------------------------------------------ left action

  // T_i · h for 1 ≤ i < n.
  Elem left_T(int i, const Elem& h) const {
    require(i >= 1 && i < n_, "generator index out of range");
    Elem out;
    std::vector<int> a;
    for (const auto& [k, c] : h) {
      std::uint32_t arank = k / nfact_, w = k % nfact_;
      a = a_vector(arank);
      int alpha = a[i - 1], beta = a[i];
      std::vector<int> sa = a;
      std::swap(sa[i - 1], sa[i]);
      std::uint32_t sar = alpha == beta ? arank : a_rank(sa);
      std::uint32_t sw = sym_.left(i, w);
      if (sym_.length(sw) > sym_.length(w)) {
        add_to(out, key(sar, sw), c);
      } else {
        add_to(out, key(sar, w), qm1_ * c);
        add_to(out, key(sar, sw), params_.q * c);
      }
      if (alpha == beta) continue;
      F cc = qm1_ * c;
      std::vector<int> b = a;
      if (alpha > beta) {
        for (int t = 0; t < alpha - beta; ++t) {
          b[i - 1] = beta + t;
          b[i] = alpha - t;
          add_to(out, key(a_rank(b), w), -cc);
        }
      } else {
        for (int t = 0; t < beta - alpha; ++t) {
          b[i - 1] = alpha + t;
          b[i] = beta - t;
          add_to(out, key(a_rank(b), w), cc);
        }
      }
    }
    return out;
  }

  // L_1 · h = T_0 · h.
  Elem left_L1(const Elem& h) const {
    Elem out;
    std::uint32_t top = 1;
    for (int k = 1; k < n_; ++k) top *= r_;  // weight of a_1 in a_rank
    for (const auto& [k, c] : h) {
      std::uint32_t arank = k / nfact_, w = k % nfact_;
      std::uint32_t a1 = arank / top;
      if (static_cast<int>(a1) + 1 < r_) {
        add_to(out, key(arank + top, w), c);
      } else {
        std::uint32_t rest = arank - a1 * top;
        for (int e = 0; e < r_; ++e) add_to(out, key(rest + e * top, w), cap_[e] * c);
      }
    }
    return out;
  }

  Elem left_gen(int i, const Elem& h) const { return i == 0 ? left_L1(h) : left_T(i, h); }

  // L_k · h with L_k = q^{1−k} T_{k−1}...T_1 T_0 T_1...T_{k−1}.
  Elem left_L(int k, Elem h) const {
    for (int i = k - 1; i >= 1; --i) h = left_T(i, h);
    h = left_L1(h);
    for (int i = 1; i <= k - 1; ++i) h = left_T(i, h);
    if (k > 1) h = scale(h, power(params_.q, 1 - k));
    return h;
  }

  // T_w · h along a reduced word.
  Elem left_Tw(std::uint32_t w, Elem h) const {
    auto word = reduced_word(sym_.perm(w));
    for (auto it = word.rbegin(); it != word.rend(); ++it) h = left_T(*it, h);
    return h;
  }

  // ----------------------------------------------------------- right action

  Elem right_T(int i, const Elem& h) const {
    require(i >= 1 && i < n_, "generator index out of range");
    Elem out;
    for (const auto& [k, c] : h) {
      std::uint32_t arank = k / nfact_, w = k % nfact_;
      std::uint32_t ws = sym_.right(i, w);
      if (sym_.length(ws) > sym_.length(w)) {
        add_to(out, key(arank, ws), c);
      } else {
        add_to(out, key(arank, w), qm1_ * c);
        add_to(out, key(arank, ws), params_.q * c);
      }
    }
    return out;
  }

  Elem right_mul_generator(const Elem& h, int i) const {
    require(i >= 0 && i < n_, "generator index out of range");
    if (i == 0) return star(left_L1(star(h)));
    return right_T(i, h);
  }

  Elem right_Tw(Elem h, std::uint32_t w) const {
    for (int i : reduced_word(sym_.perm(w))) h = right_T(i, h);
    return h;
  }

  // ------------------------------------------------------------------- star

  // (L^a T_w)^* = T_{w^{-1}} L^a.
  const Elem& star_monomial(std::uint32_t k) const {
    auto it = star_cache_.find(k);
    if (it != star_cache_.end()) return it->second;
    std::uint32_t arank = k / nfact_, w = k % nfact_;
    Elem e = left_Tw(sym_.inverse(w), basis_element(key(arank, 0)));
    return star_cache_.emplace(k, std::move(e)).first->second;
  }

  Elem star(const Elem& h) const {
    Elem out;
    for (const auto& [k, c] : h) {
      std::uint32_t w = k % nfact_;
      if (w == 0) {
        add_to(out, k, c);
        continue;
      }
      for (const auto& [k2, c2] : star_monomial(k)) add_to(out, k2, c * c2);
    }
    return out;
  }

  // --------------------------------------------------------------- products

  Elem multiply(const Elem& g, const Elem& h) const {
    if (g.empty() || h.empty()) return {};
    // Group g by a-vector: g = Σ_a L^a (Σ_w c_{a,w} T_w).
    std::map<std::uint32_t, std::vector<std::pair<std::uint32_t, F>>> groups;
    for (const auto& [k, c] : g) groups[k / nfact_].push_back({k % nfact_, c});
    std::map<std::uint32_t, Elem> tw;  // T_w h, filled on demand
    std::function<const Elem&(std::uint32_t)> tw_of = [&](std::uint32_t w) -> const Elem& {
      auto it = tw.find(w);
      if (it != tw.end()) return it->second;
      if (w == 0) return tw.emplace(0, h).first->second;
      const Perm& p = sym_.perm(w);
      int i = 1;
      while (p[i - 1] < p[i]) ++i;  // left descent: w = s_i (s_i w)
      Elem e = left_T(i, tw_of(sym_.left(i, w)));
      return tw.emplace(w, std::move(e)).first->second;
    };
    Elem out;
    for (const auto& [arank, terms] : groups) {
      Elem x;
      for (const auto& [w, c] : terms)
        for (const auto& [k2, c2] : tw_of(w)) add_to(x, k2, c * c2);
      auto a = a_vector(arank);
      for (int k = n_; k >= 1; --k)
        for (int t = 0; t < a[k - 1]; ++t) x = left_L(k, x);
      for (const auto& [k2, c2] : x) add_to(out, k2, c2);
    }
    return out;
  }

  F tau(const Elem& h) const {
    auto it = h.find(0);
    return it == h.end() ? F(0) : it->second;
  }

  // ------------------------------------------------------ Murphy elements

  // Generators of the Young subgroup attached to the concatenated rows.
  std::vector<std::uint32_t> young_subgroup(const Shape& mu) const {
    std::vector<int> block(n_ + 1, 0);
    int k = 1, b = 0;
    for (const auto& c : mu)
      for (int part : c) {
        for (int t = 0; t < part; ++t) block[k++] = b;
        ++b;
      }
    require(k == n_ + 1, "shape size does not match n");
    std::vector<std::uint32_t> out;
    for (int w = 0; w < sym_.size(); ++w) {
      const Perm& p = sym_.perm(w);
      bool ok = true;
      for (int j = 1; j <= n_ && ok; ++j) ok = block[p[j - 1]] == block[j];
      if (ok) out.push_back(static_cast<std::uint32_t>(w));
    }
    return out;
  }

  Elem x_lambda(const Shape& mu) const {
    Elem e;
    for (auto w : young_subgroup(mu)) e.emplace(key(0, w), F(1));
    return e;
  }

  // u^+ · h = ∏_{s≥2} ∏_{k ≤ |μ^(1)|+...+|μ^(s−1)|} (L_k − Q_s) · h.
  Elem left_u_plus(const Shape& mu, Elem h) const {
    int before = 0;
    for (int s = 2; s <= static_cast<int>(mu.size()); ++s) {
      before += component_size(mu[s - 2]);
      for (int k = 1; k <= before; ++k) h = sub(left_L(k, h), scale(h, params_.Q[s - 1]));
    }
    return h;
  }
  Elem u_plus(const Shape& mu) const { return left_u_plus(mu, one()); }

  Elem m_lambda(const Shape& mu) const {
    require(static_cast<int>(mu.size()) == r_, "shape must have r components");
    require(shape_size(mu) == n_, "shape size does not match n");
    return left_u_plus(mu, x_lambda(mu));
  }

  // m_{st} = T_{d(s)}^* m_λ T_{d(t)}.
  Elem m_st(const StandardTableau& s, const StandardTableau& t) const {
    require(s.shape == t.shape, "m_st: tableaux of different shapes");
    Elem e = right_Tw(m_lambda(s.shape), sym_.rank(t.d));
    return left_Tw(sym_.inverse(sym_.rank(s.d)), e);
  }

  std::string str(const Elem& h) const {
    if (h.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : h) {
      auto [a, w] = decode(k);
      std::string mono;
      for (int i = 0; i < n_; ++i)
        if (a[i]) mono += "L" + std::to_string(i + 1) + (a[i] > 1 ? "^" + std::to_string(a[i]) : "");
      if (k % nfact_) mono += "T" + cycle_str(w);
      if (!out.empty()) out += " + ";
      out += "(" + c.str() + ")" + (mono.empty() ? "" : "*" + mono);
    }
    return out;
  }

 private:
  SymTables sym_;
  int r_, n_;
  HeckeParams<F> params_;
  std::uint32_t nfact_ = 1, acount_ = 1;
  std::vector<F> cap_;
  F qm1_;
  mutable std::map<std::uint32_t, Elem> star_cache_;
};

}  // namespace akh
