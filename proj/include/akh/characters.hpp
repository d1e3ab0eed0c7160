#pragma once

#include <map>
#include <vector>

#include "akh/coeff/ratfunc.hpp"
#include "akh/combinatorics.hpp"
#include "akh/hecke.hpp"
#include "akh/seminormal.hpp"

namespace akh {

// Symbolic parameters: q and Q_s are the variables of RatFunc.
inline HeckeParams<RatFunc> symbolic_params(int r) {
  require(r >= 1 && r <= kMaxSymbolicR, "symbolic mode supports 1 <= r <= 6");
  HeckeParams<RatFunc> p;
  p.r = r;
  p.q = RatFunc::var(kVarQ);
  for (int s = 1; s <= r; ++s) p.Q.push_back(RatFunc::var(s));
  return p;
}

// Value of a symbolic expression at concrete parameters (v ↦ v_value if used).
template <class F>
F specialize(const RatFunc& x, const HeckeParams<F>& p, const F* v_value = nullptr) {
  std::vector<F> vals(kNumVars, F(0));
  vals[kVarQ] = p.q;
  for (int s = 1; s <= p.r; ++s) vals[s] = p.Q[s - 1];
  if (v_value) vals[kVarV] = *v_value;
  return x.evaluate(vals);
}

template <class F>
F character_value(const SeminormalOracle<F>& oracle, std::size_t block, const typename HeckeAlgebra<F>::Elem& h) {
  return oracle.image(h)[block].trace();
}

struct SchurElement {
  Multipartition lambda;
  int L = 0;
  long long a_rL = 0;
  long long b_rL = 0;
  RatFunc value;
};

// Product formula over L-symbols, symbolic in q, Q_1..Q_r.
inline SchurElement schur_element(const Multipartition& lambda, int L) {
  int r = static_cast<int>(lambda.size());
  int n = shape_size(lambda);
  LSymbol sym = l_symbol(lambda, L);
  auto p = symbolic_params(r);
  const RatFunc& q = p.q;
  auto qp = [&](int k) { return RatFunc::var(kVarQ, k); };
  RatFunc num(1), den(1);
  for (int s = 1; s <= r; ++s)
    for (int t = s + 1; t <= r; ++t)
      for (int k = 0; k < L; ++k) num *= p.Q[s - 1] - p.Q[t - 1];
  for (int s = 1; s <= r; ++s)
    for (int t = 1; t <= r; ++t)
      for (int alpha : sym.beta[s - 1])
        for (int k = 1; k <= alpha; ++k) num *= qp(k) * p.Q[s - 1] - p.Q[t - 1];
  for (int k = 0; k < n; ++k) {
    den *= q - RatFunc(1);
    for (int s = 1; s <= r; ++s) den *= p.Q[s - 1];
  }
  for (int s = 1; s <= r; ++s)
    for (int t = s; t <= r; ++t)
      for (int as : sym.beta[s - 1])
        for (int at : sym.beta[t - 1]) {
          if (s == t && !(as > at)) continue;
          den *= qp(as) * p.Q[s - 1] - qp(at) * p.Q[t - 1];
        }
  SchurElement out;
  out.lambda = lambda;
  out.L = L;
  out.a_rL = static_cast<long long>(n) * (r - 1) + static_cast<long long>(r) * (r - 1) / 2 * (static_cast<long long>(L) * (L - 1) / 2);
  long long b12 = static_cast<long long>(r) * L * (L - 1) * (2LL * r * L - r - 3);
  ensure(b12 % 12 == 0, "b_rL is not an integer");
  out.b_rL = b12 / 12;
  RatFunc unit = qp(static_cast<int>(out.b_rL));
  if (out.a_rL % 2) unit = -unit;
  out.value = unit * num / den;
  return out;
}

inline SchurElement schur_element(const Multipartition& lambda) { return schur_element(lambda, std::max(1, multipartition_length(lambda))); }

// D_λ = s_η / s_λ with η = ((n),(0),...,(0)).
inline RatFunc generic_degree(const Multipartition& lambda) {
  int r = static_cast<int>(lambda.size());
  Multipartition eta(r);
  int n = shape_size(lambda);
  if (n > 0) eta[0] = {n};
  return schur_element(eta).value / schur_element(lambda).value;
}

// τ(h) = Σ_λ χ^λ(h)/s_λ on every basis monomial.  Returns the first failing
// monomial key through *bad_key when the identity fails.
template <class F>
bool tau_expansion_check(const HeckeAlgebra<F>& alg, std::uint32_t* bad_key = nullptr) {
  SeminormalOracle<F> oracle(alg);
  std::vector<F> inv_s;
  for (const auto& rep : oracle.reps()) {
    RatFunc s = schur_element(rep.shape).value;
    if constexpr (std::is_same_v<F, RatFunc>) inv_s.push_back(RatFunc(1) / s);
    else inv_s.push_back(F(1) / specialize(s, alg.params()));
  }
  for (std::uint32_t k = 0; k < alg.dim(); ++k) {
    const auto& img = oracle.monomial(k);
    F total(0);
    for (std::size_t b = 0; b < img.size(); ++b) total += inv_s[b] * img[b].trace();
    F expect = k == 0 ? F(1) : F(0);
    if (!(total == expect)) {
      if (bad_key) *bad_key = k;
      return false;
    }
  }
  return true;
}

}  // namespace akh
