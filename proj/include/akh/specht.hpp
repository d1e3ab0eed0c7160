#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "akh/combinatorics.hpp"
#include "akh/hecke.hpp"
#include "akh/linalg.hpp"

namespace akh {

// The Murphy basis {m_st} with a factored change of basis from the
// monomial basis.  Shapes are grouped in dominance-refining order.
template <class F>
class MurphyBasis {
 public:
  using Elem = typename HeckeAlgebra<F>::Elem;

  struct Cell {
    Multipartition shape;
    std::vector<StandardTableau> tableaux;
    int offset = 0;  // index of (t^λ, t^λ)
    int dim() const { return static_cast<int>(tableaux.size()); }
  };

  explicit MurphyBasis(const HeckeAlgebra<F>& alg) : alg_(alg) {
    int off = 0;
    for (const auto& lam : enumerate_multipartitions(alg.r(), alg.n())) {
      Cell c;
      c.shape = lam;
      c.tableaux = standard_tableaux(lam);
      c.offset = off;
      off += c.dim() * c.dim();
      shape_index_[lam] = static_cast<int>(cells_.size());
      cells_.push_back(std::move(c));
    }
    size_ = off;
    ensure(size_ == static_cast<int>(alg.dim()), "Murphy basis count differs from r^n n!");
    Matrix<F> a(size_, size_);
    for (const auto& c : cells_) {
      Elem ml = alg.m_lambda(c.shape);
      for (int i = 0; i < c.dim(); ++i) {
        Elem left = alg.left_Tw(alg.sym().inverse(alg.sym().rank(c.tableaux[i].d)), ml);
        for (int j = 0; j < c.dim(); ++j) {
          Elem e = alg.right_Tw(left, alg.sym().rank(c.tableaux[j].d));
          int col = index(c, i, j);
          for (const auto& [k, v] : e) a(static_cast<int>(k), col) = v;
        }
      }
    }
    solver_ = EchelonSolver<F>(std::move(a), true);
    ensure(solver_.rank() == size_, "Murphy elements are linearly dependent (engine bug)");
  }

  const HeckeAlgebra<F>& algebra() const { return alg_; }
  const std::vector<Cell>& cells() const { return cells_; }
  int size() const { return size_; }
  const Cell& cell(const Multipartition& lam) const {
    auto it = shape_index_.find(lam);
    require(it != shape_index_.end(), "unknown shape " + shape_str(lam));
    return cells_[it->second];
  }
  static int index(const Cell& c, int s, int t) { return c.offset + s * c.dim() + t; }

  Elem m_st(const Cell& c, int s, int t) const { return alg_.m_st(c.tableaux[s], c.tableaux[t]); }

  std::vector<F> coordinates(const Elem& h) const {
    std::vector<F> b(size_, F(0));
    for (const auto& [k, v] : h) b[k] = v;
    auto x = solver_.solve(b);
    ensure(x.has_value(), "Murphy coordinates: inconsistent system (engine bug)");
    return *x;
  }

  // Matrix of right multiplication by h on S^λ in the basis {m_t}.
  Matrix<F> specht_matrix(const Multipartition& lam, const Elem& h) const {
    const Cell& c = cell(lam);
    Matrix<F> m(c.dim(), c.dim());
    Elem ml = alg_.m_lambda(lam);
    for (int t = 0; t < c.dim(); ++t) {
      Elem mt = alg_.right_Tw(ml, alg_.sym().rank(c.tableaux[t].d));
      auto x = coordinates(alg_.multiply(mt, h));
      for (int v = 0; v < c.dim(); ++v) m(t, v) = x[index(c, 0, v)];
    }
    return m;
  }

  Matrix<F> specht_action(const Multipartition& lam, int i) const { return specht_matrix(lam, alg_.generator(i)); }

  // ⟨m_s, m_t⟩ = coefficient of m_λ in m_{t^λ s} m_{t t^λ}.
  Matrix<F> gram_matrix(const Multipartition& lam) const {
    const Cell& c = cell(lam);
    Matrix<F> g(c.dim(), c.dim());
    Elem ml = alg_.m_lambda(lam);
    std::vector<Elem> right, left;
    for (const auto& t : c.tableaux) {
      right.push_back(alg_.right_Tw(ml, alg_.sym().rank(t.d)));
      left.push_back(alg_.left_Tw(alg_.sym().inverse(alg_.sym().rank(t.d)), ml));
    }
    for (int s = 0; s < c.dim(); ++s)
      for (int t = 0; t < c.dim(); ++t) {
        if (t < s && symmetric_shortcut_) {
          g(s, t) = g(t, s);
          continue;
        }
        auto x = coordinates(alg_.multiply(right[s], left[t]));
        g(s, t) = x[index(c, 0, 0)];
      }
    return g;
  }

  // Uses Gram symmetry to halve the work; tests switch it off.
  void set_symmetric_shortcut(bool on) { symmetric_shortcut_ = on; }

 private:
  const HeckeAlgebra<F>& alg_;
  std::vector<Cell> cells_;
  std::map<Multipartition, int> shape_index_;
  int size_ = 0;
  EchelonSolver<F> solver_;
  bool symmetric_shortcut_ = false;
};

struct SimpleInfo {
  Multipartition shape;
  int dim_specht = 0;
  int dim_simple = 0;  // rank of the Gram matrix
};

template <class F>
std::vector<SimpleInfo> simple_dimensions(const MurphyBasis<F>& mb) {
  std::vector<SimpleInfo> out;
  for (const auto& c : mb.cells()) {
    SimpleInfo s;
    s.shape = c.shape;
    s.dim_specht = c.dim();
    s.dim_simple = rank(mb.gram_matrix(c.shape));
    out.push_back(s);
  }
  return out;
}

// Residue multiset of t^λ as sorted strings of the scalar values.
template <class F>
std::vector<std::string> residue_multiset(const Multipartition& lam, const HeckeParams<F>& p) {
  std::vector<std::string> out;
  for (const auto& x : nodes_of(lam)) out.push_back(p.residue(x).str());
  std::sort(out.begin(), out.end());
  return out;
}

// Classes of multipartitions of n with equal residue multisets, in
// enumeration order of their first members.
template <class F>
std::vector<std::vector<Multipartition>> residue_blocks(const HeckeParams<F>& p, int n) {
  std::vector<std::vector<Multipartition>> out;
  std::map<std::vector<std::string>, int> where;
  for (const auto& lam : enumerate_multipartitions(p.r, n)) {
    auto key = residue_multiset(lam, p);
    auto it = where.find(key);
    if (it == where.end()) {
      where[key] = static_cast<int>(out.size());
      out.push_back({lam});
    } else {
      out[it->second].push_back(lam);
    }
  }
  return out;
}

// P_n(q, Q_1, ..., Q_κ) ≠ 0 for the grouping of the indices 1..r.
template <class F>
bool morita_reduction_predicate(const HeckeParams<F>& p, int n, const std::vector<std::vector<int>>& groups) {
  std::vector<int> seen(p.r + 1, 0);
  for (const auto& g : groups)
    for (int s : g) {
      require(s >= 1 && s <= p.r, "group index out of range");
      require(!seen[s]++, "groups must be disjoint");
    }
  for (int s = 1; s <= p.r; ++s) require(seen[s] == 1, "groups must cover 1..r");
  F prod(1);
  for (std::size_t a = 0; a < groups.size(); ++a)
    for (std::size_t b = a + 1; b < groups.size(); ++b)
      for (int i : groups[a])
        for (int j : groups[b])
          for (int d = -n + 1; d < n; ++d) prod = prod * (power(p.q, d) * p.Q[i - 1] - p.Q[j - 1]);
  return !prod.is_zero();
}

}  // namespace akh
