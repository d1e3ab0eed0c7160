#pragma once

#include <random>

#include "akh/hecke.hpp"
#include "akh/selftest.hpp"

namespace akh::testing {

inline HeckeParams<Rational> generic(int r, int n, unsigned seed) {
  std::mt19937 rng(seed);
  return selftest::random_generic(rng, r, n);
}

template <class F>
HeckeParams<F> params(int r, F q, std::vector<F> Q) {
  return selftest::make_params<F>(r, std::move(q), std::move(Q));
}

}  // namespace akh::testing
