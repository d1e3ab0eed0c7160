#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "akh/combinatorics.hpp"
#include "akh/hecke.hpp"
#include "akh/linalg.hpp"

namespace akh {

// V^{⊗n} with dim V = d = d_1 + ... + d_r; basis e_a, a ∈ I(d;n) in
// lexicographic order.
struct TensorSpace {
  std::vector<int> split;
  int n = 0;
  int d = 0;
  std::vector<std::vector<int>> tuples;

  TensorSpace(std::vector<int> d_split, int n_) : split(std::move(d_split)), n(n_) {
    require(!split.empty(), "d-split must be nonempty");
    for (int x : split) require(x >= 1, "each d_s must be >= 1");
    require(n >= 0, "n must be >= 0");
    d = std::accumulate(split.begin(), split.end(), 0);
    std::vector<int> a(n, 1);
    long long total = ipow(d, n);
    require(total <= 6561, "tensor space too large");
    for (long long k = 0; k < total; ++k) {
      tuples.push_back(a);
      for (int p = n - 1; p >= 0; --p) {
        if (a[p] < d) {
          ++a[p];
          break;
        }
        a[p] = 1;
      }
    }
  }

  int r() const { return static_cast<int>(split.size()); }
  int dim() const { return static_cast<int>(tuples.size()); }
  int index(const std::vector<int>& a) const {
    int k = 0;
    for (int x : a) k = k * d + (x - 1);
    return k;
  }
  // γ(a) = s for the minimal s with a ≤ d_1 + ... + d_s.
  int gamma(int a) const {
    int run = 0;
    for (int s = 0; s < r(); ++s) {
      run += split[s];
      if (a <= run) return s + 1;
    }
    throw DomainError("index outside 1..d");
  }
};

// T̃_j on row vectors: e_a T̃_j = v e_a, e_{at_j}, or e_{at_j} + (v − v⁻¹) e_a
// as a_j = a_{j+1}, a_j > a_{j+1}, a_j < a_{j+1}.
template <class F>
Matrix<F> jimbo_action(const TensorSpace& V, int j, const F& v) {
  require(j >= 1 && j < V.n, "generator index out of range");
  if (v.is_zero()) throw DomainError("v must be nonzero");
  Matrix<F> m(V.dim(), V.dim());
  F gap = v - F(1) / v;
  for (int k = 0; k < V.dim(); ++k) {
    auto a = V.tuples[k];
    int x = a[j - 1], y = a[j];
    if (x == y) {
      m(k, k) = v;
      continue;
    }
    std::swap(a[j - 1], a[j]);
    m(k, V.index(a)) = F(1);
    if (x < y) m(k, k) = gap;
  }
  return m;
}

template <class F>
Matrix<F> jimbo_inverse(const TensorSpace& V, int j, const F& v) {
  // T̃⁻¹ = T̃ − (v − v⁻¹)
  return jimbo_action(V, j, v) - (v - F(1) / v) * Matrix<F>::identity(V.dim());
}

template <class F>
Matrix<F> varpi(const TensorSpace& V, const std::vector<F>& Q) {
  require(static_cast<int>(Q.size()) == V.r(), "need one Q_s per component of the d-split");
  Matrix<F> m(V.dim(), V.dim());
  for (int k = 0; k < V.dim(); ++k) m(k, k) = Q[V.gamma(V.tuples[k][0]) - 1];
  return m;
}

// S_j = T̃_j when a_j and a_{j+1} lie in the same V_s, the flip e_{at_j} otherwise.
template <class F>
Matrix<F> s_operator(const TensorSpace& V, int j, const F& v) {
  Matrix<F> jt = jimbo_action(V, j, v);
  Matrix<F> m(V.dim(), V.dim());
  for (int k = 0; k < V.dim(); ++k) {
    auto a = V.tuples[k];
    if (V.gamma(a[j - 1]) == V.gamma(a[j])) {
      for (int c = 0; c < V.dim(); ++c) m(k, c) = jt(k, c);
    } else {
      std::swap(a[j - 1], a[j]);
      m(k, V.index(a)) = F(1);
    }
  }
  return m;
}

// e_a T_0 = e_a ϖ S_1 ⋯ S_{n−1} T̃_{n−1}⁻¹ ⋯ T̃_1⁻¹.
template <class F>
Matrix<F> sakamoto_shoji_T0(const TensorSpace& V, const F& v, const std::vector<F>& Q) {
  for (const auto& x : Q)
    if (x.is_zero()) throw DomainError("Q_s must be nonzero");
  Matrix<F> m = varpi(V, Q);
  for (int j = 1; j < V.n; ++j) m = m * s_operator(V, j, v);
  for (int j = V.n - 1; j >= 1; --j) m = m * jimbo_inverse(V, j, v);
  return m;
}

// T_0, T_1 = vT̃_1, ..., T_{n−1} = vT̃_{n−1}: an H_{v²,Q}(W_{r,n}) action.
template <class F>
std::vector<Matrix<F>> tensor_generators(const TensorSpace& V, const F& v, const std::vector<F>& Q) {
  std::vector<Matrix<F>> g;
  if (V.n == 0) return g;
  g.push_back(sakamoto_shoji_T0(V, v, Q));
  for (int j = 1; j < V.n; ++j) g.push_back(v * jimbo_action(V, j, v));
  return g;
}

template <class F>
HeckeParams<F> tensor_params(const F& v, const std::vector<F>& Q) {
  HeckeParams<F> p;
  p.r = static_cast<int>(Q.size());
  p.q = v * v;
  p.Q = Q;
  return p;
}

struct SchurWeylCount {
  long long tensor_dim = 0;          // dⁿ
  long long bimodule_dim = 0;        // Σ_λ ∏_s ssyt(λ^(s), d_s) · |Std(λ)|
  long long expected_commutant = 0;  // Σ_λ (∏_s ssyt(λ^(s), d_s))²
};

inline SchurWeylCount schur_weyl_counts(const TensorSpace& V) {
  SchurWeylCount c;
  c.tensor_dim = V.dim();
  for (const auto& lam : enumerate_multipartitions(V.r(), V.n)) {
    long long w = 1;
    for (int s = 0; s < V.r(); ++s) w *= ssyt_count(lam[s], V.split[s]);
    if (w == 0) continue;
    c.bimodule_dim += w * static_cast<long long>(standard_tableaux(lam).size());
    c.expected_commutant += w * w;
  }
  return c;
}

// dim {X : gX = Xg for every g}.
template <class F>
long long commutant_dimension(const std::vector<Matrix<F>>& gens, int dim) {
  int N = dim * dim;
  RowSpace<F> eq(N);
  for (const auto& g : gens)
    for (int u = 0; u < dim; ++u)
      for (int v = 0; v < dim; ++v) {
        std::vector<F> row(N, F(0));
        for (int w = 0; w < dim; ++w) {
          if (!g(u, w).is_zero()) row[w * dim + v] += g(u, w);
          if (!g(w, v).is_zero()) row[u * dim + w] -= g(w, v);
        }
        eq.add(std::move(row));
      }
  return N - eq.dim();
}

}  // namespace akh
