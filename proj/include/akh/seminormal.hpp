#pragma once

#include <map>
#include <vector>

#include "akh/combinatorics.hpp"
#include "akh/hecke.hpp"
#include "akh/linalg.hpp"

namespace akh {

// Generator matrices of V^λ acting on row vectors indexed by Std(λ).
template <class F>
struct SeminormalRep {
  Multipartition shape;
  std::vector<StandardTableau> basis;
  std::vector<Matrix<F>> gens;  // gens[i] is T_i, 0 ≤ i < n

  int dim() const { return static_cast<int>(basis.size()); }
};

inline Node node_of(const StandardTableau& t, int k) { return t.position(k); }

// kCorrected puts res_t(i+1) in the numerator of the diagonal coefficient:
// v_t T_i = (q−1)res_t(i+1)/(res_t(i+1)−res_t(i)) v_t + (q res_t(i) − res_t(i+1))/(res_t(i)−res_t(i+1)) v_s.
// kNaiveDiagonal uses res_t(i) there instead; then L_{i+1} = q^{-1}T_iL_iT_i is
// not diagonal and the braid relations fail (kept for the regression test).
enum class SeminormalVariant { kCorrected, kNaiveDiagonal };

template <class F>
SeminormalRep<F> seminormal_rep(const Multipartition& lambda, const HeckeParams<F>& p, bool check_semisimple = true,
                                SeminormalVariant variant = SeminormalVariant::kCorrected) {
  require(static_cast<int>(lambda.size()) == p.r, "shape must have r components");
  int n = shape_size(lambda);
  if (check_semisimple && p_hecke(p, n).is_zero()) throw DomainError("not semisimple: P_H(q,Q) = 0 at these parameters");
  SeminormalRep<F> rep;
  rep.shape = lambda;
  rep.basis = standard_tableaux(lambda);
  int d = rep.dim();
  std::map<std::vector<std::vector<std::vector<int>>>, int> index;
  for (int a = 0; a < d; ++a) index[rep.basis[a].entries] = a;
  if (n == 0) return rep;
  Matrix<F> t0(d, d);
  for (int a = 0; a < d; ++a) t0(a, a) = p.residue(node_of(rep.basis[a], 1));
  rep.gens.push_back(t0);
  for (int i = 1; i < n; ++i) {
    Matrix<F> m(d, d);
    Perm sw = identity_perm(n);
    std::swap(sw[i - 1], sw[i]);
    for (int a = 0; a < d; ++a) {
      const auto& t = rep.basis[a];
      Node x = node_of(t, i), y = node_of(t, i + 1);
      auto f = act_on_filling(t.entries, sw);
      if (!is_standard_filling(f)) {
        if (x.s == y.s && x.i == y.i) m(a, a) = p.q;
        else if (x.s == y.s && x.j == y.j) m(a, a) = F(-1);
        else ensure(false, "seminormal: non-standard swap outside a row or column");
        continue;
      }
      int b = index.at(f);
      F rt = p.residue(x);  // res_t(i)
      F rs = p.residue(y);  // res_s(i): i sits where i+1 was in t
      F den = rt - rs;
      if (den.is_zero()) throw DomainError("seminormal form has a pole: equal residues");
      if (variant == SeminormalVariant::kNaiveDiagonal) m(a, a) = (p.q - F(1)) * rt / den;
      else m(a, a) = (p.q - F(1)) * rs / (rs - rt);
      m(a, b) = (p.q * rt - rs) / den;
    }
    rep.gens.push_back(std::move(m));
  }
  return rep;
}

// ⊕_λ V^λ.  Faithful when P_H(q,Q) ≠ 0.
template <class F>
class SeminormalOracle {
 public:
  using Elem = typename HeckeAlgebra<F>::Elem;
  using Image = std::vector<Matrix<F>>;

  explicit SeminormalOracle(const HeckeAlgebra<F>& h) : alg_(h) {
    for (const auto& lam : enumerate_multipartitions(h.r(), h.n())) reps_.push_back(seminormal_rep(lam, h.params()));
    int n = h.n();
    for (auto& rep : reps_) {
      std::vector<Matrix<F>> ls;
      // L_k from its definition in terms of T_0, ..., T_{k−1}.
      for (int k = 1; k <= n; ++k) {
        Matrix<F> m = rep.gens[0];
        for (int i = 1; i < k; ++i) m = rep.gens[i] * m * rep.gens[i];
        ls.push_back(power(h.q(), 1 - k) * m);
      }
      lmats_.push_back(std::move(ls));
    }
  }

  const std::vector<SeminormalRep<F>>& reps() const { return reps_; }

  Image identity() const {
    Image out;
    for (const auto& rep : reps_) out.push_back(Matrix<F>::identity(rep.dim()));
    return out;
  }
  Image generator(int i) const {
    Image out;
    for (const auto& rep : reps_) out.push_back(rep.gens.at(i));
    return out;
  }

  // Image of a single basis monomial L^a T_w.
  const Image& monomial(std::uint32_t key) const {
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    auto [a, w] = alg_.decode(key);
    auto word = reduced_word(w);
    Image out;
    for (std::size_t b = 0; b < reps_.size(); ++b) {
      Matrix<F> m = Matrix<F>::identity(reps_[b].dim());
      for (int k = 0; k < alg_.n(); ++k)
        for (int t = 0; t < a[k]; ++t) m = m * lmats_[b][k];
      for (int i : word) m = m * reps_[b].gens[i];
      out.push_back(std::move(m));
    }
    return cache_.emplace(key, std::move(out)).first->second;
  }

  Image image(const Elem& h) const {
    Image out;
    for (const auto& rep : reps_) out.push_back(Matrix<F>(rep.dim(), rep.dim()));
    for (const auto& [k, c] : h) {
      const Image& m = monomial(k);
      for (std::size_t b = 0; b < out.size(); ++b) out[b] = out[b] + c * m[b];
    }
    return out;
  }

  static Image product(const Image& x, const Image& y) {
    Image out;
    for (std::size_t b = 0; b < x.size(); ++b) out.push_back(x[b] * y[b]);
    return out;
  }
  static bool equal(const Image& x, const Image& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t b = 0; b < x.size(); ++b)
      if (x[b] != y[b]) return false;
    return true;
  }
  // Concatenated entries of all blocks; Σ_λ dim(V^λ)^2 coordinates.
  static std::vector<F> flatten(const Image& x) {
    std::vector<F> v;
    for (const auto& m : x)
      for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
    return v;
  }

 private:
  const HeckeAlgebra<F>& alg_;
  std::vector<SeminormalRep<F>> reps_;
  std::vector<std::vector<Matrix<F>>> lmats_;
  mutable std::map<std::uint32_t, Image> cache_;
};

// Checks every defining relation on a family of generator matrices.
template <class F>
bool relations_hold(const std::vector<Matrix<F>>& g, const HeckeParams<F>& p, std::string* failure = nullptr) {
  int n = static_cast<int>(g.size());
  if (n == 0) return true;
  int d = g[0].rows();
  auto I = Matrix<F>::identity(d);
  auto fail = [&](const std::string& what) {
    if (failure) *failure = what;
    return false;
  };
  Matrix<F> ord = I;
  for (int s = 0; s < p.r; ++s) ord = ord * (g[0] - p.Q[s] * I);
  if (!ord.is_zero()) return fail("(T0-Q1)...(T0-Qr) = 0");
  for (int i = 1; i < n; ++i)
    if (!((g[i] - p.q * I) * (g[i] + I)).is_zero()) return fail("(T" + std::to_string(i) + "-q)(T" + std::to_string(i) + "+1) = 0");
  if (n > 1 && g[0] * g[1] * g[0] * g[1] != g[1] * g[0] * g[1] * g[0]) return fail("T0T1T0T1 = T1T0T1T0");
  for (int i = 0; i < n; ++i)
    for (int j = i + 2; j < n; ++j)
      if (g[i] * g[j] != g[j] * g[i]) return fail("T" + std::to_string(i) + "T" + std::to_string(j) + " = T" + std::to_string(j) + "T" + std::to_string(i));
  for (int i = 1; i + 1 < n; ++i)
    if (g[i] * g[i + 1] * g[i] != g[i + 1] * g[i] * g[i + 1]) return fail("braid relation at " + std::to_string(i));
  return true;
}

}  // namespace akh
