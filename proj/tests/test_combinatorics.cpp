#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "akh/combinatorics.hpp"

using namespace akh;

namespace {

// Partition numbers by Euler's pentagonal recurrence.
std::vector<long long> partition_numbers(int n) {
  std::vector<long long> p(n + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int k = 1;; ++k) {
      int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      long long sign = (k % 2) ? 1 : -1;
      p[m] += sign * p[m - g1];
      if (g2 <= m) p[m] += sign * p[m - g2];
    }
  return p;
}

// Hook length formula, times the multinomial for the component sizes.
long long hook_count(const Multipartition& lam) {
  long long out = factorial(shape_size(lam));
  for (const auto& c : lam) {
    auto conj = conjugate(c);
    for (std::size_t i = 0; i < c.size(); ++i)
      for (int j = 0; j < c[i]; ++j) out /= (c[i] - j - 1) + (conj[j] - static_cast<int>(i) - 1) + 1;
  }
  return out;
}

// Kostka numbers by stripping a horizontal strip of size μ_last.
long long kostka(const Partition& lam, std::vector<int> mu) {
  while (!mu.empty() && mu.back() == 0) mu.pop_back();
  if (mu.empty()) return lam.empty() || lam[0] == 0 ? 1 : 0;
  int k = mu.back();
  mu.pop_back();
  long long total = 0;
  // Choose ν ⊂ λ with λ/ν a horizontal strip of size k.
  std::function<void(std::size_t, Partition&, int)> rec = [&](std::size_t i, Partition& nu, int left) {
    if (i == lam.size()) {
      if (left == 0) {
        Partition t = nu;
        while (!t.empty() && t.back() == 0) t.pop_back();
        total += kostka(t, mu);
      }
      return;
    }
    int lo = i + 1 < lam.size() ? lam[i + 1] : 0;
    for (int v = lam[i]; v >= lo && lam[i] - v <= left; --v) {
      nu[i] = v;
      rec(i + 1, nu, left - (lam[i] - v));
    }
  };
  Partition nu(lam.size(), 0);
  rec(0, nu, k);
  return total;
}

}  // namespace

TEST(Multipartitions, CountsMatchGeneratingFunction) {
  auto p = partition_numbers(8);
  for (int r = 1; r <= 3; ++r) {
    // Coefficients of (Σ p(k) x^k)^r.
    std::vector<long long> c(9, 0);
    c[0] = 1;
    for (int s = 0; s < r; ++s) {
      std::vector<long long> d(9, 0);
      for (int a = 0; a <= 8; ++a)
        for (int b = 0; a + b <= 8; ++b) d[a + b] += c[a] * p[b];
      c = d;
    }
    for (int n = 0; n <= 8; ++n) EXPECT_EQ(static_cast<long long>(enumerate_multipartitions(r, n).size()), c[n]) << r << "," << n;
  }
}

TEST(Multipartitions, SortedByDominanceLinearExtension) {
  auto v = enumerate_multipartitions(2, 4);
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = a + 1; b < v.size(); ++b) EXPECT_FALSE(dominates_strictly(v[b], v[a]));
  for (const auto& x : v) {
    EXPECT_TRUE(dominance_ge(x, x));
    for (const auto& y : v)
      if (x != y) {
        EXPECT_FALSE(dominance_ge(x, y) && dominance_ge(y, x));
      }
  }
}

TEST(Tableaux, StandardCountsAreHookLengths) {
  for (int r = 1; r <= 3; ++r)
    for (int n = 0; n <= 5; ++n)
      for (const auto& lam : enumerate_multipartitions(r, n)) {
        auto ts = standard_tableaux(lam);
        EXPECT_EQ(static_cast<long long>(ts.size()), hook_count(lam)) << shape_str(lam);
        std::set<StandardTableau> uniq(ts.begin(), ts.end());
        EXPECT_EQ(uniq.size(), ts.size());
        for (const auto& t : ts) EXPECT_TRUE(is_standard_filling(t.entries));
      }
}

TEST(Tableaux, CountIdentity) {
  for (int r = 1; r <= 4; ++r)
    for (int n = 0; n <= 6; ++n) EXPECT_TRUE(count_identity_check(r, n));
}

TEST(Tableaux, SemistandardCountsAreKostkaNumbers) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& lam : partitions(n))
      for (const auto& mu : partitions(n))
        EXPECT_EQ(static_cast<long long>(semistandard_tableaux({lam}, {mu}).size()), kostka(lam, mu));
}

TEST(Permutations, ReducedWords) {
  int n = 4;
  std::vector<int> base{1, 2, 3, 4};
  do {
    Perm w(base.begin(), base.end());
    auto word = reduced_word(w);
    EXPECT_EQ(static_cast<int>(word.size()), perm_length(w));
    EXPECT_EQ(perm_compose(w, perm_inverse(w)), identity_perm(n));
  } while (std::next_permutation(base.begin(), base.end()));
}

TEST(Nodes, AddableRemovableAndHooks) {
  Multipartition lam{{3, 1}, {2}};
  EXPECT_EQ(removable_nodes(lam).size(), 3u);
  EXPECT_EQ(addable_nodes(lam).size(), 5u);
  for (const auto& x : addable_nodes(lam)) EXPECT_EQ(remove_node(add_node(lam, x), x), lam);
  EXPECT_EQ(conjugate(conjugate({4, 2, 2, 1})), (Partition{4, 2, 2, 1}));
  // One rim hook per node, of size the hook length.
  EXPECT_EQ(static_cast<int>(rim_hooks(lam).size()), shape_size(lam));
  for (const auto& h : rim_hooks(lam)) {
    const auto& c = lam[h.x.s - 1];
    int hook = c[h.x.i - 1] - h.x.j + conjugate(c)[h.x.j - 1] - h.x.i + 1;
    EXPECT_EQ(static_cast<int>(h.nodes.size()), hook);
    EXPECT_EQ(shape_size(h.remainder), shape_size(lam) - hook);
  }
}

TEST(Shapes, EmptyInputs) {
  EXPECT_EQ(enumerate_multipartitions(3, 0).size(), 1u);
  EXPECT_EQ(standard_tableaux(Multipartition(2)).size(), 1u);
  EXPECT_EQ(shape_str(Multipartition(1)), "()");
}
