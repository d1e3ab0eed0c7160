#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "akh/combinatorics.hpp"
#include "akh/errors.hpp"

namespace akh {

// Q_s = q^{a_s} with q of multiplicative order e; e = 0 means e = ∞.
struct EResidueConfig {
  int e = 0;
  std::vector<int> charge;

  int r() const { return static_cast<int>(charge.size()); }
  int reduce(long long k) const {
    if (e == 0) return static_cast<int>(k);
    long long m = k % e;
    return static_cast<int>(m < 0 ? m + e : m);
  }
};

inline EResidueConfig make_config(int e, std::vector<int> charge) {
  require(e == 0 || e >= 2, "e must be >= 2 (or 0 for infinity)");
  require(!charge.empty(), "charge must have r >= 1 entries");
  EResidueConfig c{e, std::move(charge)};
  for (auto& a : c.charge) a = c.reduce(a);
  return c;
}

inline int e_residue(const Node& x, const EResidueConfig& c) {
  require(x.s >= 1 && x.s <= c.r(), "node component out of range");
  return c.reduce(static_cast<long long>(c.charge[x.s - 1]) + x.j - x.i);
}

// y is below x if y lies in a later component, or in a later row of the same one.
inline bool is_below(const Node& y, const Node& x) { return y.s > x.s || (y.s == x.s && y.i > x.i); }

enum class NormalRule {
  kStandard,   // every addable i-node y below x has more removable than addable i-nodes strictly between
  kLiteral,    // the two conditions with "removable i-node below x" in the first condition
  kSignature,  // bracket cancellation on the i-signature read from top to bottom
};

struct NodeClassification {
  int residue = 0;
  std::vector<Node> addable;    // i-nodes, top to bottom
  std::vector<Node> removable;  // i-nodes, top to bottom
  std::vector<bool> normal;     // parallel to removable
  std::optional<Node> good;
};

namespace detail {

inline bool node_order(const Node& a, const Node& b) { return is_below(b, a); }

inline int count_between(const std::vector<Node>& v, const Node& top, const Node& bottom) {
  int k = 0;
  for (const auto& z : v)
    if (is_below(z, top) && is_below(bottom, z)) ++k;
  return k;
}

inline int count_below(const std::vector<Node>& v, const Node& x) {
  int k = 0;
  for (const auto& z : v)
    if (is_below(z, x)) ++k;
  return k;
}

}  // namespace detail

inline NodeClassification classify_nodes(const Multipartition& lambda, int i, const EResidueConfig& c,
                                         NormalRule rule = NormalRule::kStandard) {
  require(static_cast<int>(lambda.size()) == c.r(), "shape must have r components");
  NodeClassification out;
  out.residue = c.reduce(i);
  for (const auto& x : addable_nodes(lambda))
    if (e_residue(x, c) == out.residue) out.addable.push_back(x);
  for (const auto& x : removable_nodes(lambda))
    if (e_residue(x, c) == out.residue) out.removable.push_back(x);
  std::sort(out.addable.begin(), out.addable.end(), detail::node_order);
  std::sort(out.removable.begin(), out.removable.end(), detail::node_order);
  const auto& A = out.addable;
  const auto& R = out.removable;
  for (const auto& x : R) {
    bool ok = true;
    switch (rule) {
      case NormalRule::kStandard:
        for (const auto& y : A)
          if (is_below(y, x) && detail::count_between(R, x, y) <= detail::count_between(A, x, y)) ok = false;
        break;
      case NormalRule::kLiteral:
        for (const auto& y : R)
          if (is_below(y, x) && detail::count_between(R, x, y) <= detail::count_between(A, x, y)) ok = false;
        if (detail::count_below(R, x) < detail::count_below(A, x)) ok = false;
        break;
      case NormalRule::kSignature: {
        // Read below x from the top: a removable node opens, an addable node
        // closes; x survives if no addable node is left unmatched.
        std::vector<std::pair<Node, bool>> seq;  // (node, removable?)
        for (const auto& y : A)
          if (is_below(y, x)) seq.emplace_back(y, false);
        for (const auto& y : R)
          if (is_below(y, x)) seq.emplace_back(y, true);
        std::sort(seq.begin(), seq.end(), [](const auto& a, const auto& b) { return detail::node_order(a.first, b.first); });
        int open = 0;
        for (const auto& [y, rem] : seq) {
          if (rem) ++open;
          else if (open > 0) --open;
          else ok = false;
        }
        break;
      }
    }
    out.normal.push_back(ok);
  }
  // Good: normal with no normal i-node above it, i.e. the highest normal node.
  for (std::size_t k = 0; k < R.size(); ++k)
    if (out.normal[k]) {
      out.good = R[k];
      break;
    }
  return out;
}

inline std::set<int> residue_range(const EResidueConfig& c, const Multipartition& lambda) {
  std::set<int> out;
  for (const auto& x : addable_nodes(lambda)) out.insert(e_residue(x, c));
  for (const auto& x : removable_nodes(lambda)) out.insert(e_residue(x, c));
  return out;
}

struct CrystalEdge {
  Multipartition from, to;
  int residue = 0;
};

struct KleshchevLevels {
  std::vector<std::vector<Multipartition>> levels;  // levels[m] = Kleshchev multipartitions of m
  std::vector<std::vector<CrystalEdge>> edges;      // edges[m]: level m−1 → m
};

// Kleshchev multipartitions of 0..n, built by adding good nodes.
inline KleshchevLevels kleshchev_levels(int n, const EResidueConfig& c, NormalRule rule = NormalRule::kStandard) {
  require(n >= 0, "n must be >= 0");
  KleshchevLevels k;
  k.levels.push_back({Multipartition(c.r())});
  k.edges.emplace_back();
  for (int m = 1; m <= n; ++m) {
    std::set<Multipartition> next;
    std::vector<CrystalEdge> edges;
    for (const auto& lam : k.levels[m - 1])
      for (const auto& x : addable_nodes(lam)) {
        Multipartition mu = add_node(lam, x);
        int i = e_residue(x, c);
        auto cl = classify_nodes(mu, i, c, rule);
        if (cl.good && cl.good->i == x.i && cl.good->j == x.j && cl.good->s == x.s) {
          next.insert(mu);
          edges.push_back({lam, mu, i});
        }
      }
    std::vector<Multipartition> lvl(next.begin(), next.end());
    sort_dominance(lvl);
    k.levels.push_back(std::move(lvl));
    k.edges.push_back(std::move(edges));
  }
  return k;
}

inline std::vector<Multipartition> kleshchev_multipartitions(int n, const EResidueConfig& c, NormalRule rule = NormalRule::kStandard) {
  return kleshchev_levels(n, c, rule).levels[n];
}

inline bool is_kleshchev(const Multipartition& mu, const EResidueConfig& c) {
  auto k = kleshchev_multipartitions(shape_size(mu), c);
  return std::find(k.begin(), k.end(), canonical(mu)) != k.end();
}

inline bool is_e_restricted(const Partition& p, int e) {
  if (e == 0) return true;
  for (std::size_t k = 0; k < p.size(); ++k) {
    int next = k + 1 < p.size() ? p[k + 1] : 0;
    if (p[k] - next >= e) return false;
  }
  return true;
}

// Removing (restriction) or adding (induction) one i-node.
inline std::vector<Multipartition> i_restriction(const Multipartition& lambda, int i, const EResidueConfig& c) {
  std::vector<Multipartition> out;
  for (const auto& x : removable_nodes(lambda))
    if (e_residue(x, c) == c.reduce(i)) out.push_back(remove_node(lambda, x));
  return out;
}

inline std::vector<Multipartition> i_induction(const Multipartition& lambda, int i, const EResidueConfig& c) {
  std::vector<Multipartition> out;
  for (const auto& x : addable_nodes(lambda))
    if (e_residue(x, c) == c.reduce(i)) out.push_back(add_node(lambda, x));
  return out;
}

struct BranchingTerm {
  Multipartition lambda;
  int residue = 0;
};

// {λ : λ →good μ}; the labelling permutations are taken to be trivial.
inline std::vector<BranchingTerm> branching_prediction(const Multipartition& mu, const EResidueConfig& c) {
  if (!is_kleshchev(mu, c)) throw DomainError(shape_str(mu) + " is not a Kleshchev multipartition");
  std::vector<BranchingTerm> out;
  for (int i : residue_range(c, mu)) {
    auto cl = classify_nodes(mu, i, c);
    if (cl.good) out.push_back({remove_node(mu, *cl.good), cl.residue});
  }
  return out;
}

}  // namespace akh
