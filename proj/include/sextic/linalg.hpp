#pragma once

#include "sextic/errors.hpp"

#include <cstddef>
#include <vector>

namespace sextic {

/// Dense row-major matrix over a field.
template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, F(0)) {}
  static Matrix from_rows(const std::vector<std::vector<F>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  F& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<F> row(std::size_t i) const {
    return std::vector<F>(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  /// In-place reduced row echelon form; returns the pivot columns.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t p = r;
      while (p < rows_ && is_zero((*this)(p, c))) ++p;
      if (p == rows_) continue;
      if (p != r)
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(r, j));
      F inv = F(1) / (*this)(r, c);
      for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) *= inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r || is_zero((*this)(i, c))) continue;
        F f = (*this)(i, c);
        for (std::size_t j = c; j < cols_; ++j) {
          if (!is_zero((*this)(r, j))) (*this)(i, j) -= f * (*this)(r, j);
        }
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> a_;
};

template <class F>
std::size_t rank(Matrix<F> m) {
  return m.rref().size();
}

template <class F>
std::size_t rank_of_vectors(const std::vector<std::vector<F>>& vs) {
  if (vs.empty()) return 0;
  return rank(Matrix<F>::from_rows(vs));
}

/// Basis of the right nullspace {x : M x = 0}, returned in reduced echelon form
/// (as row vectors), so the result is canonical for the space.
template <class F>
std::vector<std::vector<F>> nullspace(Matrix<F> m) {
  auto pivots = m.rref();
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<F> v(n, F(0));
    v[f] = F(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, f);
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return basis;
  Matrix<F> b = Matrix<F>::from_rows(basis);
  b.rref();
  std::vector<std::vector<F>> out;
  for (std::size_t i = 0; i < b.rows(); ++i) out.push_back(b.row(i));
  return out;
}

/// Row-echelon canonical basis of the span of the given vectors (zero rows dropped).
template <class F>
std::vector<std::vector<F>> echelon_basis(const std::vector<std::vector<F>>& vs) {
  if (vs.empty()) return {};
  Matrix<F> m = Matrix<F>::from_rows(vs);
  std::size_t r = m.rref().size();
  std::vector<std::vector<F>> out;
  for (std::size_t i = 0; i < r; ++i) out.push_back(m.row(i));
  return out;
}

/// Unique solution of a square system, or nullopt-like failure via exception.
template <class F>
std::vector<F> solve_square(const Matrix<F>& a, const std::vector<F>& b) {
  const std::size_t n = a.rows();
  Matrix<F> aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  auto piv = aug.rref();
  if (piv.size() != n || piv.back() != n - 1) throw ArithmeticError("singular linear system");
  std::vector<F> x(n, F(0));
  for (std::size_t i = 0; i < n; ++i) x[i] = aug(i, n);
  return x;
}

}  // namespace sextic
