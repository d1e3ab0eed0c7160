#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "akh/errors.hpp"

namespace akh {

using Partition = std::vector<int>;
// r-tuple of integer sequences with trailing zeros trimmed in each component.
// A multipartition is a Shape whose components are weakly decreasing.
using Shape = std::vector<std::vector<int>>;
using Multipartition = Shape;
using Multicomposition = Shape;
// One-line notation: perm[k-1] = (k)w.  Permutations act on the right and
// compose left to right: (k)(xy) = ((k)x)y.
using Perm = std::vector<int>;

struct Node {
  int i = 1;  // row
  int j = 1;  // column
  int s = 1;  // component
  friend bool operator==(const Node& a, const Node& b) { return a.i == b.i && a.j == b.j && a.s == b.s; }
  friend bool operator<(const Node& a, const Node& b) {
    if (a.s != b.s) return a.s < b.s;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

inline Shape canonical(Shape s) {
  for (auto& c : s)
    while (!c.empty() && c.back() == 0) c.pop_back();
  return s;
}

inline int shape_size(const Shape& s) {
  int n = 0;
  for (const auto& c : s)
    for (int x : c) n += x;
  return n;
}

inline int component_size(const std::vector<int>& c) { return std::accumulate(c.begin(), c.end(), 0); }

inline bool is_multipartition(const Shape& s) {
  for (const auto& c : s) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] < 0) return false;
      if (i + 1 < c.size() && c[i] < c[i + 1]) return false;
    }
  }
  return true;
}

inline void validate_shape(const Shape& s, bool need_partition) {
  for (const auto& c : s)
    for (int x : c) require(x >= 0, "negative part in shape");
  if (need_partition) require(is_multipartition(s), "components must be weakly decreasing");
}

// Readable form: "(2,1)" for r = 1, "((2),(1,1))" otherwise; "()" is empty.
inline std::string shape_str(const Shape& s) {
  auto comp = [](const std::vector<int>& c) {
    std::string out = "(";
    for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + std::to_string(c[i]);
    return out + ")";
  };
  if (s.size() == 1) return comp(s[0]);
  std::string out = "(";
  for (std::size_t k = 0; k < s.size(); ++k) out += (k ? "," : "") + comp(s[k]);
  return out + ")";
}

inline std::vector<Partition> partitions(int n, int max_part = -1) {
  if (max_part < 0) max_part = n;
  std::vector<Partition> out;
  if (n == 0) {
    out.push_back({});
    return out;
  }
  for (int first = std::min(n, max_part); first >= 1; --first)
    for (auto& rest : partitions(n - first, first)) {
      Partition p{first};
      p.insert(p.end(), rest.begin(), rest.end());
      out.push_back(std::move(p));
    }
  return out;
}

// Prefix sums Σ_{t<s}|λ^(t)| + Σ_{j≤i} λ^(s)_j for i = 1..n, s = 1..r.
inline std::vector<int> dominance_vector(const Shape& s, int n) {
  std::vector<int> v;
  int before = 0;
  for (const auto& c : s) {
    int run = before;
    for (int i = 0; i < n; ++i) {
      if (i < static_cast<int>(c.size())) run += c[i];
      v.push_back(run);
    }
    before += component_size(c);
  }
  return v;
}

inline bool dominance_ge(const Shape& a, const Shape& b) {
  require(a.size() == b.size(), "dominance: mismatched r");
  int n = shape_size(a);
  require(n == shape_size(b), "dominance: mismatched n");
  int len = 1;
  for (const auto& c : a) len = std::max(len, static_cast<int>(c.size()));
  for (const auto& c : b) len = std::max(len, static_cast<int>(c.size()));
  auto va = dominance_vector(a, len), vb = dominance_vector(b, len);
  for (std::size_t i = 0; i < va.size(); ++i)
    if (va[i] < vb[i]) return false;
  return true;
}

inline bool dominates_strictly(const Shape& a, const Shape& b) { return a != b && dominance_ge(a, b); }

// Sorts shapes into a total order refining dominance (more dominant first).
inline void sort_dominance(std::vector<Shape>& v) {
  int n = v.empty() ? 0 : shape_size(v[0]);
  int len = std::max(1, n);
  std::stable_sort(v.begin(), v.end(), [len](const Shape& a, const Shape& b) {
    auto va = dominance_vector(a, len), vb = dominance_vector(b, len);
    if (va != vb) return va > vb;
    return a > b;
  });
}

inline std::vector<Multipartition> enumerate_multipartitions(int r, int n) {
  require(r >= 1, "r must be >= 1");
  require(n >= 0, "n must be >= 0");
  std::vector<Multipartition> out;
  std::function<void(int, int, Shape&)> rec = [&](int s, int left, Shape& cur) {
    if (s == r - 1) {
      for (auto& p : partitions(left)) {
        cur[s] = p;
        out.push_back(cur);
      }
      return;
    }
    for (int k = left; k >= 0; --k)
      for (auto& p : partitions(k)) {
        cur[s] = p;
        rec(s + 1, left - k, cur);
      }
  };
  Shape cur(r);
  rec(0, n, cur);
  sort_dominance(out);
  return out;
}

// Λ_{r,n}: r-tuples of compositions, each of length at most n, of total n.
inline std::vector<Multicomposition> enumerate_multicompositions(int r, int n) {
  require(r >= 1 && n >= 0, "bad (r,n)");
  std::vector<Multicomposition> out;
  int slots = r * std::max(n, 1);
  std::vector<int> cur(slots, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == slots - 1) {
      cur[pos] = left;
      Shape s(r);
      int w = std::max(n, 1);
      for (int k = 0; k < r; ++k) s[k] = std::vector<int>(cur.begin() + k * w, cur.begin() + (k + 1) * w);
      out.push_back(canonical(s));
      return;
    }
    for (int k = left; k >= 0; --k) {
      cur[pos] = k;
      rec(pos + 1, left - k);
    }
  };
  rec(0, n);
  sort_dominance(out);
  return out;
}

// ω = ((0),...,(0),(1^n)).
inline Multicomposition omega_weight(int r, int n) {
  Shape w(r);
  w[r - 1] = std::vector<int>(n, 1);
  return w;
}

// ---------------------------------------------------------------- perms

inline Perm identity_perm(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 1);
  return p;
}
inline Perm perm_compose(const Perm& x, const Perm& y) {  // x then y
  Perm r(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) r[k] = y[x[k] - 1];
  return r;
}
inline Perm perm_inverse(const Perm& x) {
  Perm r(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) r[x[k] - 1] = static_cast<int>(k) + 1;
  return r;
}
inline int perm_length(const Perm& x) {
  int inv = 0;
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = a + 1; b < x.size(); ++b)
      if (x[a] > x[b]) ++inv;
  return inv;
}
// w = s_{i1} s_{i2} ... s_{ik}, reduced.
inline std::vector<int> reduced_word(Perm w) {
  std::vector<int> rev;
  bool again = true;
  while (again) {
    again = false;
    // Right descent at i: value i sits after value i+1.
    auto inv = perm_inverse(w);
    for (std::size_t i = 1; i < w.size(); ++i) {
      if (inv[i - 1] > inv[i]) {
        // w = w' s_i; w' swaps values i and i+1.
        std::swap(w[inv[i - 1] - 1], w[inv[i] - 1]);
        rev.push_back(static_cast<int>(i));
        again = true;
        break;
      }
    }
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}
inline std::string cycle_str(const Perm& w) {
  std::vector<bool> seen(w.size(), false);
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (seen[k] || w[k] == static_cast<int>(k) + 1) continue;
    std::string cyc = "(";
    std::size_t c = k;
    bool first = true;
    while (!seen[c]) {
      seen[c] = true;
      cyc += (first ? "" : ",") + std::to_string(c + 1);
      first = false;
      c = w[c] - 1;
    }
    out += cyc + ")";
  }
  return out.empty() ? "()" : out;
}

// ---------------------------------------------------------------- tableaux

struct StandardTableau {
  Multipartition shape;
  // entries[s][row][col], 0-based indices, values 1..n
  std::vector<std::vector<std::vector<int>>> entries;
  Perm d;  // t = t^λ d(t)

  Node position(int k) const {
    for (std::size_t s = 0; s < entries.size(); ++s)
      for (std::size_t i = 0; i < entries[s].size(); ++i)
        for (std::size_t j = 0; j < entries[s][i].size(); ++j)
          if (entries[s][i][j] == k) return {static_cast<int>(i) + 1, static_cast<int>(j) + 1, static_cast<int>(s) + 1};
    throw DomainError("entry not in tableau");
  }
  friend bool operator==(const StandardTableau& a, const StandardTableau& b) { return a.entries == b.entries; }
  friend bool operator<(const StandardTableau& a, const StandardTableau& b) { return a.entries < b.entries; }
};

inline std::vector<std::vector<std::vector<int>>> empty_filling(const Shape& shape) {
  std::vector<std::vector<std::vector<int>>> f(shape.size());
  for (std::size_t s = 0; s < shape.size(); ++s)
    for (int len : shape[s]) f[s].push_back(std::vector<int>(len, 0));
  return f;
}

// t^λ: 1..n entered along rows, components in order.
inline StandardTableau initial_tableau(const Shape& shape) {
  StandardTableau t;
  t.shape = shape;
  t.entries = empty_filling(shape);
  int k = 0;
  for (auto& comp : t.entries)
    for (auto& row : comp)
      for (auto& v : row) v = ++k;
  t.d = identity_perm(k);
  return t;
}

// Positions of 1..n in a filling.
inline std::vector<Node> filling_positions(const std::vector<std::vector<std::vector<int>>>& f, int n) {
  std::vector<Node> pos(n + 1);
  for (std::size_t s = 0; s < f.size(); ++s)
    for (std::size_t i = 0; i < f[s].size(); ++i)
      for (std::size_t j = 0; j < f[s][i].size(); ++j)
        pos[f[s][i][j]] = {static_cast<int>(i) + 1, static_cast<int>(j) + 1, static_cast<int>(s) + 1};
  return pos;
}

inline Perm tableau_permutation(const StandardTableau& tl, const std::vector<std::vector<std::vector<int>>>& f) {
  int n = shape_size(tl.shape);
  Perm d(n);
  auto pos = filling_positions(tl.entries, n);
  for (int k = 1; k <= n; ++k) d[k - 1] = f[pos[k].s - 1][pos[k].i - 1][pos[k].j - 1];
  return d;
}

// Std(λ) with t^λ first.
inline std::vector<StandardTableau> standard_tableaux(const Multipartition& shape) {
  validate_shape(shape, true);
  int n = shape_size(shape);
  StandardTableau tl = initial_tableau(shape);
  std::vector<StandardTableau> out;
  auto f = empty_filling(shape);
  std::vector<std::vector<int>> filled(shape.size());
  for (std::size_t s = 0; s < shape.size(); ++s) filled[s].assign(shape[s].size(), 0);
  std::function<void(int)> rec = [&](int k) {
    if (k > n) {
      StandardTableau t;
      t.shape = shape;
      t.entries = f;
      t.d = tableau_permutation(tl, f);
      out.push_back(std::move(t));
      return;
    }
    for (std::size_t s = 0; s < shape.size(); ++s)
      for (std::size_t i = 0; i < shape[s].size(); ++i) {
        int j = filled[s][i];
        if (j >= shape[s][i]) continue;
        if (i > 0 && filled[s][i - 1] <= j) continue;
        f[s][i][j] = k;
        ++filled[s][i];
        rec(k + 1);
        --filled[s][i];
        f[s][i][j] = 0;
      }
  };
  rec(1);
  return out;
}

// Shape(t↓k): the nodes holding 1..k.
inline Shape restricted_shape(const StandardTableau& t, int k) {
  Shape s(t.shape.size());
  for (std::size_t c = 0; c < t.entries.size(); ++c)
    for (const auto& row : t.entries[c]) {
      int len = 0;
      for (int v : row)
        if (v <= k) ++len;
      if (len) s[c].push_back(len);
    }
  return s;
}

// s ⊵ t iff Shape(s↓k) ⊵ Shape(t↓k) for all k.
inline bool tableau_dominance_ge(const StandardTableau& a, const StandardTableau& b) {
  int n = shape_size(a.shape);
  for (int k = 1; k <= n; ++k)
    if (!dominance_ge(restricted_shape(a, k), restricted_shape(b, k))) return false;
  return true;
}

// Applies a permutation on the right: entry k becomes (k)w.
inline std::vector<std::vector<std::vector<int>>> act_on_filling(const std::vector<std::vector<std::vector<int>>>& f, const Perm& w) {
  auto g = f;
  for (auto& c : g)
    for (auto& row : c)
      for (auto& v : row) v = w[v - 1];
  return g;
}

inline bool is_standard_filling(const std::vector<std::vector<std::vector<int>>>& f) {
  for (const auto& c : f)
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 0; j < c[i].size(); ++j) {
        if (j + 1 < c[i].size() && c[i][j] >= c[i][j + 1]) return false;
        if (i + 1 < c.size() && j < c[i + 1].size() && c[i][j] >= c[i + 1][j]) return false;
      }
  return true;
}

// --------------------------------------------------------- semistandard

// Value (i,s) of a semistandard tableau; ordered by component then row.
struct SValue {
  int i = 1;
  int s = 1;
  friend bool operator==(const SValue& a, const SValue& b) { return a.i == b.i && a.s == b.s; }
  friend bool operator<(const SValue& a, const SValue& b) { return a.s != b.s ? a.s < b.s : a.i < b.i; }
  friend bool operator<=(const SValue& a, const SValue& b) { return !(b < a); }
};

struct SemistandardTableau {
  Multipartition shape;
  Multicomposition type;
  std::vector<std::vector<std::vector<SValue>>> entries;  // entries[s][row][col]
  friend bool operator==(const SemistandardTableau& a, const SemistandardTableau& b) { return a.entries == b.entries; }
  friend bool operator<(const SemistandardTableau& a, const SemistandardTableau& b) {
    if (a.entries.size() != b.entries.size()) return a.entries.size() < b.entries.size();
    for (std::size_t s = 0; s < a.entries.size(); ++s) {
      if (a.entries[s].size() != b.entries[s].size()) return a.entries[s].size() < b.entries[s].size();
      for (std::size_t i = 0; i < a.entries[s].size(); ++i) {
        const auto& x = a.entries[s][i];
        const auto& y = b.entries[s][i];
        if (x.size() != y.size()) return x.size() < y.size();
        for (std::size_t j = 0; j < x.size(); ++j)
          if (!(x[j] == y[j])) return x[j] < y[j];
      }
    }
    return false;
  }
};

inline bool is_semistandard(const std::vector<std::vector<std::vector<SValue>>>& f) {
  for (std::size_t c = 0; c < f.size(); ++c)
    for (std::size_t i = 0; i < f[c].size(); ++i)
      for (std::size_t j = 0; j < f[c][i].size(); ++j) {
        const SValue& v = f[c][i][j];
        if (v.s < static_cast<int>(c) + 1) return false;
        if (j + 1 < f[c][i].size() && !(v <= f[c][i][j + 1])) return false;
        if (i + 1 < f[c].size() && j < f[c][i + 1].size() && !(v < f[c][i + 1][j])) return false;
      }
  return true;
}

// SStd(λ, μ): semistandard λ-tableaux of type μ.
inline std::vector<SemistandardTableau> semistandard_tableaux(const Multipartition& lambda, const Multicomposition& mu) {
  validate_shape(lambda, true);
  validate_shape(mu, false);
  require(lambda.size() == mu.size(), "semistandard_tableaux: mismatched r");
  require(shape_size(lambda) == shape_size(mu), "semistandard_tableaux: size mismatch");
  int r = static_cast<int>(lambda.size());
  std::vector<std::pair<SValue, int>> values;  // in ⪯ order with multiplicities
  for (int s = 1; s <= r; ++s)
    for (std::size_t i = 0; i < mu[s - 1].size(); ++i)
      if (mu[s - 1][i] > 0) values.push_back({SValue{static_cast<int>(i) + 1, s}, mu[s - 1][i]});
  std::vector<SemistandardTableau> out;
  std::vector<std::vector<std::vector<SValue>>> f(r);
  for (int s = 0; s < r; ++s) f[s].resize(lambda[s].size());
  // cur[s][i]: cells of row i in component s filled so far.
  std::vector<std::vector<int>> cur(r);
  for (int s = 0; s < r; ++s) cur[s].assign(lambda[s].size(), 0);

  // Places `left` copies of value v as a horizontal strip, scanning rows in
  // order from position (comp, row); comp restricted to comp <= v.s.
  std::function<void(std::size_t)> next_value;
  std::function<void(std::size_t, int, int, int)> place = [&](std::size_t vi, int comp, int row, int left) {
    const SValue v = values[vi].first;
    if (left == 0) {
      next_value(vi + 1);
      return;
    }
    if (comp >= r || comp + 1 > v.s) return;
    if (row >= static_cast<int>(lambda[comp].size())) {
      place(vi, comp + 1, 0, left);
      return;
    }
    // Skip this row entirely.
    place(vi, comp, row + 1, left);
    // Or put k >= 1 copies at the end of this row.
    int start = cur[comp][row];
    int room = lambda[comp][row] - start;
    // Horizontal strip: new cells may not sit below cells of this value
    // placed in the row above during this step; the row above must already
    // extend past the new cells' columns using smaller values.
    int above = row > 0 ? cur[comp][row - 1] : lambda[comp][row];
    int limit = std::min(room, left);
    for (int k = 1; k <= limit; ++k) {
      int col = start + k - 1;  // 0-based column of the last new cell
      if (row > 0) {
        // Cell above must exist and hold a strictly smaller value.
        if (col >= above) break;
        const SValue& up = f[comp][row - 1][col];
        if (!(up < v)) break;
      }
      for (int c = start; c <= col; ++c) f[comp][row].push_back(v);
      cur[comp][row] = col + 1;
      place(vi, comp, row + 1, left - k);
      cur[comp][row] = start;
      f[comp][row].resize(start);
    }
  };
  next_value = [&](std::size_t vi) {
    if (vi == values.size()) {
      for (int s = 0; s < r; ++s)
        for (std::size_t i = 0; i < lambda[s].size(); ++i)
          if (cur[s][i] != lambda[s][i]) return;
      SemistandardTableau t;
      t.shape = lambda;
      t.type = mu;
      t.entries = f;
      out.push_back(std::move(t));
      return;
    }
    place(vi, 0, 0, values[vi].second);
  };
  next_value(0);
  std::sort(out.begin(), out.end());
  return out;
}

// T^λ: row i of component s holds (i,s).
inline SemistandardTableau initial_semistandard(const Multipartition& lambda) {
  SemistandardTableau t;
  t.shape = lambda;
  t.type = lambda;
  t.entries.resize(lambda.size());
  for (std::size_t s = 0; s < lambda.size(); ++s)
    for (std::size_t i = 0; i < lambda[s].size(); ++i)
      t.entries[s].push_back(std::vector<SValue>(lambda[s][i], SValue{static_cast<int>(i) + 1, static_cast<int>(s) + 1}));
  return t;
}

// Value of each k = 1..n in t^μ: k ↦ (row, component) of k in t^μ.
inline std::vector<SValue> weight_labels(const Multicomposition& mu) {
  std::vector<SValue> lab{SValue{}};
  for (std::size_t s = 0; s < mu.size(); ++s)
    for (std::size_t i = 0; i < mu[s].size(); ++i)
      for (int k = 0; k < mu[s][i]; ++k) lab.push_back(SValue{static_cast<int>(i) + 1, static_cast<int>(s) + 1});
  return lab;
}

// μ(t): replace each entry k of t by its label in t^μ.
inline std::vector<std::vector<std::vector<SValue>>> relabel(const StandardTableau& t, const Multicomposition& mu) {
  auto lab = weight_labels(mu);
  std::vector<std::vector<std::vector<SValue>>> f(t.entries.size());
  for (std::size_t s = 0; s < t.entries.size(); ++s)
    for (const auto& row : t.entries[s]) {
      std::vector<SValue> r;
      for (int v : row) r.push_back(lab[v]);
      f[s].push_back(std::move(r));
    }
  return f;
}

// ------------------------------------------------------------------ nodes

// Residue exponent (j - i, s): res = q^{j-i} Q_s.
inline std::pair<int, int> residue_exponent(const Node& x) { return {x.j - x.i, x.s}; }

inline std::vector<Node> nodes_of(const Shape& lambda) {
  std::vector<Node> out;
  for (std::size_t s = 0; s < lambda.size(); ++s)
    for (std::size_t i = 0; i < lambda[s].size(); ++i)
      for (int j = 1; j <= lambda[s][i]; ++j) out.push_back({static_cast<int>(i) + 1, j, static_cast<int>(s) + 1});
  return out;
}

inline bool contains_node(const Shape& lambda, const Node& x) {
  if (x.s < 1 || x.s > static_cast<int>(lambda.size())) return false;
  const auto& c = lambda[x.s - 1];
  return x.i >= 1 && x.i <= static_cast<int>(c.size()) && x.j >= 1 && x.j <= c[x.i - 1];
}

inline std::vector<Node> removable_nodes(const Multipartition& lambda) {
  std::vector<Node> out;
  for (std::size_t s = 0; s < lambda.size(); ++s)
    for (std::size_t i = 0; i < lambda[s].size(); ++i) {
      int len = lambda[s][i];
      int below = i + 1 < lambda[s].size() ? lambda[s][i + 1] : 0;
      if (len > below) out.push_back({static_cast<int>(i) + 1, len, static_cast<int>(s) + 1});
    }
  return out;
}

inline std::vector<Node> addable_nodes(const Multipartition& lambda) {
  std::vector<Node> out;
  for (std::size_t s = 0; s < lambda.size(); ++s) {
    const auto& c = lambda[s];
    for (std::size_t i = 0; i <= c.size(); ++i) {
      int len = i < c.size() ? c[i] : 0;
      int above = i == 0 ? 1 << 30 : c[i - 1];
      if (len < above) out.push_back({static_cast<int>(i) + 1, len + 1, static_cast<int>(s) + 1});
    }
  }
  return out;
}

inline Multipartition add_node(Multipartition lambda, const Node& x) {
  auto& c = lambda[x.s - 1];
  if (x.i > static_cast<int>(c.size())) c.push_back(0);
  c[x.i - 1] += 1;
  return lambda;
}

inline Multipartition remove_node(Multipartition lambda, const Node& x) {
  auto& c = lambda[x.s - 1];
  c[x.i - 1] -= 1;
  return canonical(lambda);
}

struct RimHook {
  Node x;                    // the node whose hook this is
  std::vector<Node> nodes;   // rim nodes, from the end of row i to the foot
  Node foot;                 // node of largest row index (end of the leg)
  int leg_length = 0;
  Multipartition remainder;  // λ with the rim hook removed
};

inline std::vector<int> conjugate(const Partition& p) {
  std::vector<int> c;
  if (p.empty()) return c;
  for (int j = 1; j <= p[0]; ++j) {
    int len = 0;
    for (int x : p)
      if (x >= j) ++len;
    c.push_back(len);
  }
  return c;
}

inline RimHook rim_hook(const Multipartition& lambda, const Node& x) {
  require(contains_node(lambda, x), "rim_hook: node not in diagram");
  const auto& c = lambda[x.s - 1];
  auto conj = conjugate(c);
  int last_row = conj[x.j - 1];
  RimHook h;
  h.x = x;
  int row = x.i, col = c[x.i - 1];
  while (true) {
    h.nodes.push_back({row, col, x.s});
    if (row == last_row && col == x.j) break;
    if (row < last_row && row < static_cast<int>(c.size()) && c[row] >= col) ++row;  // c[row] is λ_{row+1}
    else --col;
  }
  h.foot = {last_row, x.j, x.s};
  h.leg_length = last_row - x.i;
  Multipartition rest = lambda;
  auto& rc = rest[x.s - 1];
  for (const auto& nd : h.nodes) rc[nd.i - 1] -= 1;
  h.remainder = canonical(rest);
  return h;
}

inline std::vector<RimHook> rim_hooks(const Multipartition& lambda) {
  std::vector<RimHook> out;
  for (const auto& x : nodes_of(lambda)) out.push_back(rim_hook(lambda, x));
  return out;
}

// ---------------------------------------------------------------- symbols

struct LSymbol {
  int L = 0;
  std::vector<std::vector<int>> beta;  // beta[s][i-1] = λ^(s)_i + L - i
};

inline int multipartition_length(const Multipartition& lambda) {
  int len = 0;
  for (const auto& c : lambda) len = std::max(len, static_cast<int>(c.size()));
  return len;
}

inline LSymbol l_symbol(const Multipartition& lambda, int L) {
  require(L >= multipartition_length(lambda), "l_symbol: L smaller than len(λ)");
  LSymbol sym;
  sym.L = L;
  for (const auto& c : lambda) {
    std::vector<int> b;
    for (int i = 1; i <= L; ++i) b.push_back((i <= static_cast<int>(c.size()) ? c[i - 1] : 0) + L - i);
    sym.beta.push_back(std::move(b));
  }
  return sym;
}

inline long long factorial(int n) {
  long long f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

inline long long ipow(long long b, int e) {
  long long r = 1;
  for (int k = 0; k < e; ++k) r *= b;
  return r;
}

inline bool count_identity_check(int r, int n) {
  long long total = 0;
  for (const auto& lam : enumerate_multipartitions(r, n)) {
    long long d = static_cast<long long>(standard_tableaux(lam).size());
    total += d * d;
  }
  return total == ipow(r, n) * factorial(n);
}

// Number of semistandard tableaux of partition shape p with entries <= d.
inline long long ssyt_count(const Partition& p, int d) {
  // Hook-content formula as an exact rational product.
  long long num = 1, den = 1;
  auto conj = conjugate(p);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (int j = 1; j <= p[i]; ++j) {
      long long content = j - 1 - static_cast<long long>(i);
      long long hook = p[i] - j + conj[j - 1] - static_cast<long long>(i) - 1 + 1;
      num *= d + content;
      den *= hook;
      long long g = std::gcd(num, den);
      num /= g;
      den /= g;
    }
  return num / den;
}

}  // namespace akh
