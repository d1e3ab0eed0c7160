#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "akh/combinatorics.hpp"
#include "akh/hecke.hpp"
#include "akh/linalg.hpp"
#include "akh/specht.hpp"

namespace akh {

// ---------------------------------------------------------------- weights

// Λ⁺ = {λ ⊢ n : λ ⊵ μ for some μ ∈ Λ}, more dominant first.
inline std::vector<Multipartition> dominant_shapes(const std::vector<Multicomposition>& weights, int r, int n) {
  std::vector<Multipartition> out;
  for (const auto& lam : enumerate_multipartitions(r, n))
    for (const auto& mu : weights)
      if (dominance_ge(lam, mu)) {
        out.push_back(lam);
        break;
      }
  return out;
}

inline bool is_saturated(const std::vector<Multicomposition>& weights, int r, int n) {
  for (const auto& lam : dominant_shapes(weights, r, n))
    if (std::find(weights.begin(), weights.end(), lam) == weights.end()) return false;
  return true;
}

struct PermutationCensus {
  Multicomposition mu;
  std::vector<std::pair<Multipartition, long long>> multiplicity;  // λ ↦ |SStd(λ,μ)|
  long long dim = 0;                                               // Σ_λ |SStd(λ,μ)|·|Std(λ)|
};

inline PermutationCensus permutation_module_census(const Multicomposition& mu, int r) {
  validate_shape(mu, false);
  require(static_cast<int>(mu.size()) == r, "weight must have r components");
  int n = shape_size(mu);
  PermutationCensus c;
  c.mu = mu;
  for (const auto& lam : dominant_shapes({mu}, r, n)) {
    long long k = static_cast<long long>(semistandard_tableaux(lam, mu).size());
    if (k == 0) continue;
    c.multiplicity.emplace_back(lam, k);
    c.dim += k * static_cast<long long>(standard_tableaux(lam).size());
  }
  return c;
}

// Σ_{λ∈Λ⁺} |SStd(λ,Λ)|².
inline long long schur_dimension(const std::vector<Multicomposition>& weights, int r, int n) {
  long long total = 0;
  for (const auto& lam : dominant_shapes(weights, r, n)) {
    long long k = 0;
    for (const auto& mu : weights) k += static_cast<long long>(semistandard_tableaux(lam, mu).size());
    total += k * k;
  }
  return total;
}

// ------------------------------------------------------ permutation module

// M^μ = m_μH as a subspace of H in monomial coordinates.
template <class F>
class PermutationModule {
 public:
  using Elem = typename HeckeAlgebra<F>::Elem;

  PermutationModule(const HeckeAlgebra<F>& alg, const Multicomposition& mu) : alg_(alg), mu_(mu) {
    int N = static_cast<int>(alg.dim());
    m_mu_ = alg.m_lambda(mu);
    Matrix<F> a(N, N);
    for (int k = 0; k < N; ++k) {
      Elem col = alg.multiply(m_mu_, alg.basis_element(static_cast<std::uint32_t>(k)));
      for (const auto& [key, v] : col) a(static_cast<int>(key), k) = v;
    }
    span_ = EchelonSolver<F>(a, true);
    for (int p : span_.pivots()) basis_.push_back(static_cast<std::uint32_t>(p));
    Matrix<F> b(N, dim());
    for (int j = 0; j < dim(); ++j)
      for (int i = 0; i < N; ++i) b(i, j) = a(i, basis_[j]);
    basis_solver_ = EchelonSolver<F>(std::move(b), true);
  }

  const Multicomposition& weight() const { return mu_; }
  const Elem& m_mu() const { return m_mu_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  // The j-th basis vector is m_μ·(basis monomial basis_key(j)).
  std::uint32_t basis_key(int j) const { return basis_[j]; }
  Elem basis_vector(int j) const { return alg_.multiply(m_mu_, alg_.basis_element(basis_[j])); }
  const EchelonSolver<F>& solver() const { return span_; }

  // Some h with m_μ h = target (first-pivot solution), if one exists.
  std::optional<Elem> solve(const Elem& target) const {
    auto x = span_.solve(to_vector(target));
    if (!x) return std::nullopt;
    return from_vector(*x);
  }

  std::vector<F> to_vector(const Elem& e) const {
    std::vector<F> v(alg_.dim(), F(0));
    for (const auto& [k, c] : e) v[k] = c;
    return v;
  }
  static Elem from_vector(const std::vector<F>& x) {
    Elem e;
    for (std::size_t k = 0; k < x.size(); ++k)
      if (!x[k].is_zero()) e.emplace(static_cast<std::uint32_t>(k), x[k]);
    return e;
  }

  // Coordinates of an element of M^μ in the basis above.
  std::vector<F> coordinates(const Elem& e) const {
    auto x = basis_solver_.solve(to_vector(e));
    ensure(x.has_value(), "element is not in m_mu H");
    return *x;
  }

  // Matrix of right multiplication by T_i on row vectors.
  Matrix<F> action(int i) const {
    Matrix<F> m(dim(), dim());
    for (int j = 0; j < dim(); ++j) {
      auto x = coordinates(alg_.right_mul_generator(basis_vector(j), i));
      for (int k = 0; k < dim(); ++k) m(j, k) = x[k];
    }
    return m;
  }

 private:
  const HeckeAlgebra<F>& alg_;
  Multicomposition mu_;
  Elem m_mu_;
  EchelonSolver<F> span_;
  std::vector<std::uint32_t> basis_;
  EchelonSolver<F> basis_solver_;
};

// Multiplicity of S^λ in the cell filtration of M^μ, computed on the H side:
// dim(M^μ ∩ H^{⊵λ}) − dim(M^μ ∩ H^{⊳λ}), divided by |Std(λ)|.
template <class F>
int specht_filtration_multiplicity(const MurphyBasis<F>& mb, const PermutationModule<F>& pm, const Multipartition& lam) {
  int d = pm.dim();
  std::vector<std::vector<F>> coords;
  for (int j = 0; j < d; ++j) coords.push_back(mb.coordinates(pm.basis_vector(j)));
  auto intersection_dim = [&](bool strict) {
    std::vector<int> outside;
    for (const auto& c : mb.cells()) {
      bool inside = strict ? dominates_strictly(c.shape, lam) : dominance_ge(c.shape, lam);
      if (inside) continue;
      for (int k = 0; k < c.dim() * c.dim(); ++k) outside.push_back(c.offset + k);
    }
    Matrix<F> m(d, static_cast<int>(outside.size()));
    for (int j = 0; j < d; ++j)
      for (std::size_t k = 0; k < outside.size(); ++k) m(j, static_cast<int>(k)) = coords[j][outside[k]];
    return d - rank(m);
  };
  int diff = intersection_dim(false) - intersection_dim(true);
  int sd = mb.cell(lam).dim();
  ensure(diff % sd == 0, "cell filtration layer is not a multiple of dim S^lambda");
  return diff / sd;
}

// -------------------------------------------------------------- Weyl side

template <class F>
class WeylModules {
 public:
  using Elem = typename HeckeAlgebra<F>::Elem;

  explicit WeylModules(const MurphyBasis<F>& mb) : mb_(mb), alg_(mb.algebra()) {}

  const PermutationModule<F>& module(const Multicomposition& mu) const {
    auto it = modules_.find(mu);
    if (it == modules_.end()) it = modules_.emplace(mu, std::make_unique<PermutationModule<F>>(alg_, mu)).first;
    return *it->second;
  }

  // m_{TT^λ} = Σ_{μ(s)=T} m_{st^λ}.
  Elem m_T_initial(const Multipartition& lam, const Multicomposition& mu, const SemistandardTableau& T) const {
    Elem ml = alg_.m_lambda(lam);
    Elem out;
    for (const auto& s : standard_tableaux(lam))
      if (relabel(s, mu) == T.entries) out = HeckeAlgebra<F>::add(out, alg_.left_Tw(alg_.sym().inverse(alg_.sym().rank(s.d)), ml));
    return out;
  }
  // m_{T^λS} = Σ_{μ(t)=S} m_{t^λt}.
  Elem m_initial_T(const Multipartition& lam, const Multicomposition& mu, const SemistandardTableau& S) const {
    Elem ml = alg_.m_lambda(lam);
    Elem out;
    for (const auto& t : standard_tableaux(lam))
      if (relabel(t, mu) == S.entries) out = HeckeAlgebra<F>::add(out, alg_.right_Tw(ml, alg_.sym().rank(t.d)));
    return out;
  }

  // Some h_T with m_μ h_T = m_{TT^λ}.
  Elem lift(const Multipartition& lam, const Multicomposition& mu, const SemistandardTableau& T) const {
    auto h = module(mu).solve(m_T_initial(lam, mu, T));
    ensure(h.has_value(), "m_{TT^lambda} is not in m_mu H (engine bug)");
    return *h;
  }

  F gram_entry(const Multipartition& lam, const Multicomposition& mu, const SemistandardTableau& S, const Elem& h_T) const {
    auto x = mb_.coordinates(alg_.multiply(m_initial_T(lam, mu, S), h_T));
    return x[MurphyBasis<F>::index(mb_.cell(lam), 0, 0)];
  }

  // G^λ_μ = (⟨φ_S, φ_T⟩)_{S,T ∈ SStd(λ,μ)}.
  Matrix<F> weight_gram(const Multipartition& lam, const Multicomposition& mu) const {
    auto ss = semistandard_tableaux(lam, mu);
    int d = static_cast<int>(ss.size());
    Matrix<F> g(d, d);
    std::vector<Elem> lifts;
    for (const auto& T : ss) lifts.push_back(lift(lam, mu, T));
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) g(a, b) = gram_entry(lam, mu, ss[a], lifts[b]);
    return g;
  }

  const MurphyBasis<F>& murphy() const { return mb_; }
  void release(const Multicomposition& mu) const { modules_.erase(mu); }

 private:
  const MurphyBasis<F>& mb_;
  const HeckeAlgebra<F>& alg_;
  mutable std::map<Multicomposition, std::unique_ptr<PermutationModule<F>>> modules_;
};

struct WeylCharacters {
  std::vector<Multicomposition> weights;
  std::vector<Multipartition> shapes;        // Λ⁺, more dominant first
  std::vector<std::vector<int>> weyl;        // |SStd(λ,μ)|
  std::vector<std::vector<int>> simple;      // rank G^λ_μ
};

template <class F>
WeylCharacters weyl_simple_characters(const WeylModules<F>& wm, const std::vector<Multicomposition>& weights) {
  const auto& alg = wm.murphy().algebra();
  require(is_saturated(weights, alg.r(), alg.n()), "weight set is not saturated");
  WeylCharacters ch;
  ch.weights = weights;
  ch.shapes = dominant_shapes(weights, alg.r(), alg.n());
  std::size_t m = ch.shapes.size();
  ch.weyl.assign(m, std::vector<int>(weights.size(), 0));
  ch.simple.assign(m, std::vector<int>(weights.size(), 0));
  // Weight-major so that only one permutation module is held at a time.
  for (std::size_t b = 0; b < weights.size(); ++b) {
    for (std::size_t a = 0; a < m; ++a) {
      int k = static_cast<int>(semistandard_tableaux(ch.shapes[a], weights[b]).size());
      ch.weyl[a][b] = k;
      if (k > 0) ch.simple[a][b] = rank(wm.weight_gram(ch.shapes[a], weights[b]));
    }
    wm.release(weights[b]);
  }
  for (std::size_t a = 0; a < m; ++a)
    if (std::all_of(ch.simple[a].begin(), ch.simple[a].end(), [](int x) { return x == 0; }))
      throw ConsistencyError("L^" + shape_str(ch.shapes[a]) + " has zero character");
  return ch;
}

struct DecompositionMatrix {
  // Rows and columns run through Λ⁺ from least to most dominant, so the
  // matrix of [W^row : L^col] is lower unitriangular.
  std::vector<Multipartition> rows;
  std::vector<Multipartition> cols;
  std::vector<std::vector<int>> entries;
  // Hecke submatrix [S^λ : D^μ]: all rows, columns with D^μ ≠ 0.
  std::vector<Multipartition> hecke_cols;
  std::vector<std::vector<int>> hecke_entries;
  bool has_hecke = false;
};

inline DecompositionMatrix decomposition_from_characters(const WeylCharacters& ch) {
  int m = static_cast<int>(ch.shapes.size());
  std::vector<int> weight_of(m, -1);
  for (int a = 0; a < m; ++a) {
    auto it = std::find(ch.weights.begin(), ch.weights.end(), ch.shapes[a]);
    require(it != ch.weights.end(), "weight set is not saturated");
    weight_of[a] = static_cast<int>(it - ch.weights.begin());
  }
  // d[a][b] = [W^{shapes[a]} : L^{shapes[b]}], shapes more dominant first.
  std::vector<std::vector<int>> d(m, std::vector<int>(m, 0));
  for (int a = 0; a < m; ++a) {
    std::vector<int> res = ch.weyl[a];
    for (int b = 0; b < m; ++b) {
      int k = res[weight_of[b]];
      if (k == 0) continue;
      if (k < 0) throw ConsistencyError("negative multiplicity while eliminating " + shape_str(ch.shapes[a]));
      if (ch.simple[b][weight_of[b]] != 1) throw ConsistencyError("L^" + shape_str(ch.shapes[b]) + " has highest weight multiplicity != 1");
      d[a][b] = k;
      for (std::size_t w = 0; w < res.size(); ++w) res[w] -= k * ch.simple[b][w];
    }
    for (int x : res)
      if (x != 0) throw ConsistencyError("character of W^" + shape_str(ch.shapes[a]) + " is not a sum of simple characters");
  }
  DecompositionMatrix out;
  for (int a = m - 1; a >= 0; --a) out.rows.push_back(ch.shapes[a]);
  out.cols = out.rows;
  for (int a = m - 1; a >= 0; --a) {
    std::vector<int> row;
    for (int b = m - 1; b >= 0; --b) row.push_back(d[a][b]);
    out.entries.push_back(std::move(row));
  }
  int r = static_cast<int>(ch.shapes.empty() ? 1 : ch.shapes[0].size());
  int n = ch.shapes.empty() ? 0 : shape_size(ch.shapes[0]);
  auto om = std::find(ch.weights.begin(), ch.weights.end(), canonical(omega_weight(r, n)));
  if (om != ch.weights.end()) {
    out.has_hecke = true;
    int w = static_cast<int>(om - ch.weights.begin());
    std::vector<int> keep;
    for (int b = m - 1; b >= 0; --b)
      if (ch.simple[b][w] > 0) {
        keep.push_back(m - 1 - b);
        out.hecke_cols.push_back(ch.shapes[b]);
      }
    for (const auto& row : out.entries) {
      std::vector<int> h;
      for (int c : keep) h.push_back(row[c]);
      out.hecke_entries.push_back(std::move(h));
    }
  }
  return out;
}

template <class F>
DecompositionMatrix decomposition_matrix(const WeylModules<F>& wm, const std::vector<Multicomposition>& weights) {
  return decomposition_from_characters(weyl_simple_characters(wm, weights));
}

// Linkage classes: connected components of the graph joining λ and μ
// whenever some W^ν has both L^λ and L^μ as composition factors.
inline std::vector<std::vector<Multipartition>> linkage_classes(const DecompositionMatrix& d) {
  int m = static_cast<int>(d.rows.size());
  std::vector<int> parent(m);
  for (int i = 0; i < m; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (d.entries[a][b] != 0) parent[find(a)] = find(b);
  std::map<int, std::vector<Multipartition>> groups;
  for (int a = 0; a < m; ++a) groups[find(a)].push_back(d.rows[a]);
  std::vector<std::vector<Multipartition>> out;
  for (auto& [k, g] : groups) out.push_back(std::move(g));
  return out;
}

// ---------------------------------------------------- double centralizer

struct CentralizerResult {
  long long commutant_dim = 0;
  long long bicommutant_dim = 0;
  long long expected_commutant = 0;
  long long expected_bicommutant = 0;
  bool ok() const { return commutant_dim == expected_commutant && bicommutant_dim == expected_bicommutant; }
};

// Commutant of the H-action on ⊕_{μ∈Λ} M^μ and its bicommutant.  The block
// identities lie in the commutant, so the bicommutant is block diagonal.
template <class F>
CentralizerResult double_centralizer_check(const WeylModules<F>& wm, const std::vector<Multicomposition>& weights) {
  const auto& alg = wm.murphy().algebra();
  int n = alg.n();
  int k = static_cast<int>(weights.size());
  std::vector<std::vector<Matrix<F>>> act(k);
  std::vector<int> dim(k);
  for (int a = 0; a < k; ++a) {
    const auto& pm = wm.module(weights[a]);
    dim[a] = pm.dim();
    for (int i = 0; i < n; ++i) act[a].push_back(pm.action(i));
  }
  struct Hom {
    int from, to;
    Matrix<F> x;
  };
  std::vector<Hom> homs;
  CentralizerResult res;
  // ρ_μ(T_i) X = X ρ_ν(T_i) for X : M^μ → M^ν on row vectors.
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      int p = dim[a], q = dim[b];
      RowSpace<F> eq(p * q);
      for (int i = 0; i < n; ++i)
        for (int u = 0; u < p; ++u)
          for (int v = 0; v < q; ++v) {
            std::vector<F> row(p * q, F(0));
            for (int w = 0; w < p; ++w) row[w * q + v] += act[a][i](u, w);
            for (int w = 0; w < q; ++w) row[u * q + w] -= act[b][i](w, v);
            eq.add(std::move(row));
          }
      for (auto& sol : eq.kernel()) {
        Matrix<F> x(p, q);
        for (int u = 0; u < p; ++u)
          for (int v = 0; v < q; ++v) x(u, v) = sol[u * q + v];
        homs.push_back({a, b, std::move(x)});
      }
    }
  res.commutant_dim = static_cast<long long>(homs.size());
  // Y = ⊕ Y_μ with Y_μ X = X Y_ν for every X : M^μ → M^ν.
  std::vector<int> off(k + 1, 0);
  for (int a = 0; a < k; ++a) off[a + 1] = off[a] + dim[a] * dim[a];
  RowSpace<F> eq(off[k]);
  for (const auto& h : homs) {
    int p = dim[h.from], q = dim[h.to];
    for (int u = 0; u < p; ++u)
      for (int v = 0; v < q; ++v) {
        std::vector<F> row(off[k], F(0));
        for (int w = 0; w < p; ++w) row[off[h.from] + u * p + w] += h.x(w, v);
        for (int w = 0; w < q; ++w) row[off[h.to] + w * q + v] -= h.x(u, w);
        eq.add(std::move(row));
      }
  }
  res.bicommutant_dim = off[k] - eq.dim();
  res.expected_commutant = schur_dimension(weights, alg.r(), n);
  res.expected_bicommutant = static_cast<long long>(alg.dim());
  return res;
}

// ---------------------------------------------------------- Borel census

// Double coset data for the Borel bases over Λ_{r,n}.
struct BorelCensus {
  long long minus = 0;            // #{φ^d_{λμ} : d ∈ Ω_{λμ}}
  long long plus = 0;             // #{φ^d_{λμ} : d⁻¹ ∈ Ω_{μλ}}
  bool star_bijection = false;    // d ↦ d⁻¹ matches the two families
  long long product_filtered = 0; // Σ_μ (S⁻ elements ending at μ)(S⁺ elements starting at μ)
  long long product_literal = 0;  // Σ_{λ,μ,ν} |D_{λμ}|·|D_{μν}|
  long long schur_dim = 0;
};

namespace detail {

// d ∈ D_μ iff ℓ(s_i d) > ℓ(d) for every s_i ∈ S_μ.
inline bool is_distinguished_left(const SymTables& sym, std::uint32_t d, const std::vector<int>& gens) {
  for (int i : gens)
    if (sym.length(sym.left(i, d)) < sym.length(d)) return false;
  return true;
}
inline bool is_distinguished_right(const SymTables& sym, std::uint32_t d, const std::vector<int>& gens) {
  for (int i : gens)
    if (sym.length(sym.right(i, d)) < sym.length(d)) return false;
  return true;
}

inline std::vector<int> young_generators(const Multicomposition& mu) {
  std::vector<int> gens;
  int k = 1;
  for (const auto& c : mu)
    for (int part : c) {
      for (int t = 1; t < part; ++t) gens.push_back(k + t - 1);
      k += part;
    }
  return gens;
}

// i_λ ∈ I(rn;n).
inline std::vector<int> borel_sequence(const Multicomposition& lam, int n) {
  std::vector<int> out;
  for (std::size_t s = 0; s < lam.size(); ++s)
    for (std::size_t j = 0; j < lam[s].size(); ++j)
      for (int t = 0; t < lam[s][j]; ++t) out.push_back(static_cast<int>(s) * n + static_cast<int>(j) + 1);
  return out;
}

}  // namespace detail

// Place permutation: (a·d)_{(k)d} = a_k, with d in one-line notation.
inline std::vector<int> place_permute(const std::vector<int>& a, const Perm& d) {
  std::vector<int> out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[d[k] - 1] = a[k];
  return out;
}

inline bool succeq(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] < b[k]) return false;
  return true;
}

inline BorelCensus borel_census(int r, int n) {
  require(r >= 1 && n >= 0, "bad (r,n)");
  SymTables sym(n);
  auto weights = enumerate_multicompositions(r, n);
  int k = static_cast<int>(weights.size());
  std::vector<std::vector<int>> gens(k), seq(k);
  for (int a = 0; a < k; ++a) {
    gens[a] = detail::young_generators(weights[a]);
    seq[a] = detail::borel_sequence(weights[a], n);
  }
  // D_{λμ} = D_λ ∩ D_μ^{-1}
  auto in_D = [&](int l, int m, std::uint32_t d) {
    return detail::is_distinguished_left(sym, d, gens[l]) && detail::is_distinguished_right(sym, d, gens[m]);
  };
  auto in_omega = [&](int l, int m, std::uint32_t d) { return in_D(l, m, d) && succeq(place_permute(seq[l], sym.perm(d)), seq[m]); };
  BorelCensus c;
  std::vector<long long> minus_end(k, 0), plus_start(k, 0);
  std::vector<std::vector<long long>> dsize(k, std::vector<long long>(k, 0));
  c.star_bijection = true;
  for (int l = 0; l < k; ++l)
    for (int m = 0; m < k; ++m)
      for (std::uint32_t d = 0; d < static_cast<std::uint32_t>(sym.size()); ++d) {
        if (!in_D(l, m, d)) continue;
        ++dsize[l][m];
        bool mi = in_omega(l, m, d);
        bool pl = in_omega(m, l, sym.inverse(d));
        if (mi) {
          ++c.minus;
          ++minus_end[m];
        }
        if (pl) {
          ++c.plus;
          ++plus_start[l];
        }
        if (!in_D(m, l, sym.inverse(d))) c.star_bijection = false;
      }
  if (c.minus != c.plus) c.star_bijection = false;
  for (int m = 0; m < k; ++m) c.product_filtered += minus_end[m] * plus_start[m];
  for (int l = 0; l < k; ++l)
    for (int m = 0; m < k; ++m)
      for (int v = 0; v < k; ++v) c.product_literal += dsize[l][m] * dsize[m][v];
  c.schur_dim = schur_dimension(weights, r, n);
  return c;
}

}  // namespace akh
