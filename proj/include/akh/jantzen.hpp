#pragma once

#include <string>
#include <vector>

#include "akh/coeff/upoly.hpp"
#include "akh/combinatorics.hpp"
#include "akh/hecke.hpp"
#include "akh/linalg.hpp"
#include "akh/schur.hpp"
#include "akh/specht.hpp"

namespace akh {

// Parameters qt and U_s = Q_s t^{ns} (or t^{ns} − 1 when Q_s = 0) over F(t).
template <class F>
struct ModularSystem {
  HeckeParams<F> base;
  int n = 0;

  HeckeParams<UFrac<F>> lifted() const {
    using T = UFrac<F>;
    HeckeParams<T> p;
    p.r = base.r;
    T t = T::t();
    p.q = T(base.q) * t;
    for (int s = 1; s <= base.r; ++s) {
      T ts = power(t, n * s);
      const F& Q = base.Q[s - 1];
      p.Q.push_back(Q.is_zero() ? ts - T(1) : T(Q) * ts);
    }
    return p;
  }

  UFrac<F> res_O(const Node& x) const { return lifted().residue(x); }
};

template <class F>
struct RimHookFactor {
  Multipartition lambda, mu;
  UFrac<F> value = UFrac<F>(1);
  int valuation = 0;
  int pairs = 0;  // matched (x, y)
};

// g_{λμ} = ∏_x ∏_{[μ]∖r_y = [λ]∖r_x} (res_O(r_x) − res_O(r_y))^{ε_xy}, with
// res_O(r) taken at the foot node (bottom of the hook's column).
template <class F>
RimHookFactor<F> g_factor(const Multipartition& lambda, const Multipartition& mu, const ModularSystem<F>& sys) {
  RimHookFactor<F> out;
  out.lambda = lambda;
  out.mu = mu;
  if (!dominates_strictly(lambda, mu)) return out;
  auto lp = sys.lifted();
  auto hy = rim_hooks(mu);
  for (const auto& rx : rim_hooks(lambda))
    for (const auto& ry : hy) {
      if (rx.remainder != ry.remainder) continue;
      UFrac<F> f = lp.residue(rx.foot) - lp.residue(ry.foot);
      if (f.is_zero()) throw DomainError("g factor: equal O-residues at " + shape_str(lambda) + " / " + shape_str(mu));
      bool neg = (rx.leg_length + ry.leg_length) % 2 != 0;
      out.value = neg ? out.value / f : out.value * f;
      out.valuation += (neg ? -1 : 1) * signed_valuation_at_t1(f);
      ++out.pairs;
    }
  return out;
}

// ν_p(det G^λ_ν) for a Weyl weight Gram matrix computed over F(t).
template <class F>
int lifted_weight_gram_valuation(const WeylModules<UFrac<F>>& wm, const Multipartition& lambda, const Multicomposition& nu,
                                 UFrac<F>* det_out = nullptr) {
  auto g = wm.weight_gram(lambda, nu);
  UFrac<F> det = g.rows() == 0 ? UFrac<F>(1) : determinant(g);
  if (det_out) *det_out = det;
  if (det.is_zero()) throw ConsistencyError("lifted Gram matrix is singular for " + shape_str(lambda) + " at weight " + shape_str(nu));
  return valuation_at_t1(det).value;
}

struct SumFormulaEntry {
  Multipartition lambda;
  Multicomposition nu;
  int lhs = 0;  // ν_p(det G^λ_ν)
  int rhs = 0;  // Σ_{λ⊳μ} ν_p(g_λμ)|SStd(μ,ν)|
  bool ok() const { return lhs == rhs; }
};

struct DetVsG {
  Multipartition lambda, mu;
  int det_valuation = 0;
  int g_valuation = 0;
  bool equal_up_to_sign = false;
};

struct SumFormulaReport {
  std::vector<SumFormulaEntry> entries;
  std::vector<DetVsG> det_vs_g;  // informational
  bool all_ok() const {
    for (const auto& e : entries)
      if (!e.ok()) return false;
    return true;
  }
};

// Checks the valuation identity for every λ ∈ Λ⁺ and ν ∈ Λ.
template <class F>
SumFormulaReport sum_formula_check(const ModularSystem<F>& sys, const std::vector<Multicomposition>& weights,
                                   const std::vector<Multipartition>& only = {}) {
  using T = UFrac<F>;
  HeckeAlgebra<T> alg(sys.lifted(), sys.n);
  MurphyBasis<T> mb(alg);
  WeylModules<T> wm(mb);
  require(is_saturated(weights, sys.base.r, sys.n), "weight set is not saturated");
  auto shapes = dominant_shapes(weights, sys.base.r, sys.n);
  SumFormulaReport rep;
  for (const auto& lam : shapes) {
    if (!only.empty() && std::find(only.begin(), only.end(), lam) == only.end()) continue;
    std::vector<std::pair<Multipartition, int>> gv;
    for (const auto& mu : shapes)
      if (dominates_strictly(lam, mu)) gv.emplace_back(mu, g_factor(lam, mu, sys).valuation);
    for (const auto& nu : weights) {
      SumFormulaEntry e;
      e.lambda = lam;
      e.nu = nu;
      T det(1);
      e.lhs = lifted_weight_gram_valuation(wm, lam, nu, &det);
      for (const auto& [mu, v] : gv) e.rhs += v * static_cast<int>(semistandard_tableaux(mu, nu).size());
      rep.entries.push_back(e);
      if (is_multipartition(nu) && dominates_strictly(lam, nu)) {
        auto g = g_factor(lam, nu, sys);
        DetVsG d;
        d.lambda = lam;
        d.mu = nu;
        d.det_valuation = e.lhs;
        d.g_valuation = g.valuation;
        d.equal_up_to_sign = det == g.value || det == -g.value;
        rep.det_vs_g.push_back(d);
      }
    }
  }
  return rep;
}

}  // namespace akh
