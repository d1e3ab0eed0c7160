#pragma once

#include <optional>
#include <string>
#include <vector>

#include "akh/errors.hpp"

namespace akh {

template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, F(0)) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  F& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const F& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    require(x.cols_ == y.rows_, "matrix shape mismatch");
    Matrix r(x.rows_, y.cols_);
    for (int i = 0; i < x.rows_; ++i)
      for (int k = 0; k < x.cols_; ++k) {
        const F& v = x(i, k);
        if (v.is_zero()) continue;
        for (int j = 0; j < y.cols_; ++j) {
          const F& w = y(k, j);
          if (w.is_zero()) continue;
          r(i, j) += v * w;
        }
      }
    return r;
  }
  friend Matrix operator+(const Matrix& x, const Matrix& y) {
    require(x.rows_ == y.rows_ && x.cols_ == y.cols_, "matrix shape mismatch");
    Matrix r = x;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += y.a_[i];
    return r;
  }
  friend Matrix operator-(const Matrix& x, const Matrix& y) {
    require(x.rows_ == y.rows_ && x.cols_ == y.cols_, "matrix shape mismatch");
    Matrix r = x;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= y.a_[i];
    return r;
  }
  friend Matrix operator*(const F& s, const Matrix& x) {
    Matrix r = x;
    for (auto& v : r.a_) v = s * v;
    return r;
  }
  friend bool operator==(const Matrix& x, const Matrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) return false;
    for (std::size_t i = 0; i < x.a_.size(); ++i)
      if (!(x.a_[i] == y.a_[i])) return false;
    return true;
  }
  friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

  bool is_zero() const {
    for (const auto& v : a_)
      if (!v.is_zero()) return false;
    return true;
  }
  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }
  F trace() const {
    F t(0);
    for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<F> a_;
};

// Row echelon data for A: E*A = R with R in reduced row echelon form.
// Solves A x = b for many right-hand sides after one elimination.
template <class F>
class EchelonSolver {
 public:
  EchelonSolver() = default;
  explicit EchelonSolver(Matrix<F> a, bool keep_transform = true) : rows_(a.rows()), cols_(a.cols()) {
    int m = rows_, n = cols_;
    if (keep_transform) e_ = Matrix<F>::identity(m);
    int row = 0;
    for (int col = 0; col < n && row < m; ++col) {
      int piv = -1;
      for (int i = row; i < m; ++i)
        if (!a(i, col).is_zero()) { piv = i; break; }
      if (piv < 0) continue;
      if (piv != row) {
        for (int j = 0; j < n; ++j) std::swap(a(piv, j), a(row, j));
        if (keep_transform)
          for (int j = 0; j < m; ++j) std::swap(e_(piv, j), e_(row, j));
      }
      F inv = F(1) / a(row, col);
      for (int j = col; j < n; ++j)
        if (!a(row, j).is_zero()) a(row, j) = a(row, j) * inv;
      if (keep_transform)
        for (int j = 0; j < m; ++j)
          if (!e_(row, j).is_zero()) e_(row, j) = e_(row, j) * inv;
      for (int i = 0; i < m; ++i) {
        if (i == row || a(i, col).is_zero()) continue;
        F f = a(i, col);
        for (int j = col; j < n; ++j)
          if (!a(row, j).is_zero()) a(i, j) -= f * a(row, j);
        if (keep_transform)
          for (int j = 0; j < m; ++j)
            if (!e_(row, j).is_zero()) e_(i, j) -= f * e_(row, j);
      }
      pivots_.push_back(col);
      ++row;
    }
    r_ = std::move(a);
  }

  int rank() const { return static_cast<int>(pivots_.size()); }
  const std::vector<int>& pivots() const { return pivots_; }
  const Matrix<F>& reduced() const { return r_; }

  // First-pivot solution (free variables zero), or nullopt if inconsistent.
  std::optional<std::vector<F>> solve(const std::vector<F>& b) const {
    require(static_cast<int>(b.size()) == rows_, "rhs length mismatch");
    require(e_.rows() == rows_, "solver built without transform");
    std::vector<F> y(rows_, F(0));
    for (int i = 0; i < rows_; ++i) {
      F acc(0);
      for (int j = 0; j < rows_; ++j) {
        if (e_(i, j).is_zero() || b[j].is_zero()) continue;
        acc += e_(i, j) * b[j];
      }
      y[i] = acc;
    }
    for (int i = rank(); i < rows_; ++i)
      if (!y[i].is_zero()) return std::nullopt;
    std::vector<F> x(cols_, F(0));
    for (int k = 0; k < rank(); ++k) x[pivots_[k]] = y[k];
    return x;
  }

  // Basis of the right kernel {x : A x = 0}.
  std::vector<std::vector<F>> kernel() const {
    std::vector<bool> is_piv(cols_, false);
    for (int p : pivots_) is_piv[p] = true;
    std::vector<std::vector<F>> out;
    for (int f = 0; f < cols_; ++f) {
      if (is_piv[f]) continue;
      std::vector<F> x(cols_, F(0));
      x[f] = F(1);
      for (int k = 0; k < rank(); ++k) x[pivots_[k]] = -r_(k, f);
      out.push_back(std::move(x));
    }
    return out;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  Matrix<F> r_;
  Matrix<F> e_;
  std::vector<int> pivots_;
};

template <class F>
int rank(const Matrix<F>& a) {
  return EchelonSolver<F>(a, false).rank();
}

template <class F>
F determinant(Matrix<F> a) {
  require(a.rows() == a.cols(), "determinant of non-square matrix");
  int n = a.rows();
  F det(1);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (!a(i, col).is_zero()) { piv = i; break; }
    if (piv < 0) return F(0);
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
      det = -det;
    }
    det = det * a(col, col);
    F inv = F(1) / a(col, col);
    for (int i = col + 1; i < n; ++i) {
      if (a(i, col).is_zero()) continue;
      F f = a(i, col) * inv;
      for (int j = col; j < n; ++j)
        if (!a(col, j).is_zero()) a(i, j) -= f * a(col, j);
    }
  }
  return det;
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& a) {
  require(a.rows() == a.cols(), "inverse of non-square matrix");
  EchelonSolver<F> s(a, true);
  if (s.rank() < a.rows()) return std::nullopt;
  Matrix<F> inv(a.rows(), a.cols());
  for (int j = 0; j < a.cols(); ++j) {
    std::vector<F> e(a.rows(), F(0));
    e[j] = F(1);
    auto x = s.solve(e);
    for (int i = 0; i < a.rows(); ++i) inv(i, j) = (*x)[i];
  }
  return inv;
}

// Incremental row space: keeps an echelon basis and reports whether new
// rows enlarge it.  Used for rank/kernel computations with many equations.
template <class F>
class RowSpace {
 public:
  explicit RowSpace(int n) : n_(n), pivot_row_(n, -1) {}
  int dim() const { return static_cast<int>(rows_.size()); }
  int ambient() const { return n_; }

  bool add(std::vector<F> v) {
    for (int c = 0; c < n_; ++c) {
      if (v[c].is_zero()) continue;
      int pr = pivot_row_[c];
      if (pr < 0) continue;
      F f = v[c];
      const auto& row = rows_[pr];
      for (int j = c; j < n_; ++j)
        if (!row[j].is_zero()) v[j] -= f * row[j];
    }
    int lead = -1;
    for (int c = 0; c < n_; ++c)
      if (!v[c].is_zero()) { lead = c; break; }
    if (lead < 0) return false;
    F inv = F(1) / v[lead];
    for (int j = lead; j < n_; ++j)
      if (!v[j].is_zero()) v[j] = v[j] * inv;
    // Keep rows fully reduced so kernel extraction is direct.
    for (auto& row : rows_) {
      if (row[lead].is_zero()) continue;
      F f = row[lead];
      for (int j = lead; j < n_; ++j)
        if (!v[j].is_zero()) row[j] -= f * v[j];
    }
    pivot_row_[lead] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(v));
    return true;
  }

  std::vector<std::vector<F>> kernel() const {
    std::vector<std::vector<F>> out;
    for (int f = 0; f < n_; ++f) {
      if (pivot_row_[f] >= 0) continue;
      std::vector<F> x(n_, F(0));
      x[f] = F(1);
      for (int c = 0; c < n_; ++c) {
        int pr = pivot_row_[c];
        if (pr >= 0) x[c] = -rows_[pr][f];
      }
      out.push_back(std::move(x));
    }
    return out;
  }

 private:
  int n_;
  std::vector<int> pivot_row_;
  std::vector<std::vector<F>> rows_;
};

}  // namespace akh
