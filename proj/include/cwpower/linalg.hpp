#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cwpower/cyclotomic.hpp"
#include "cwpower/error.hpp"

namespace cwp {

inline bool field_is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool field_is_zero(const Cyc& x) { return x.is_zero(); }
inline Rational field_inverse(const Rational& x) { return 1 / x; }
inline Cyc field_inverse(const Cyc& x) { return x.inverse(); }

// Dense row-major matrix over an exact field.
template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1L);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  F& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<F> row(std::size_t i) const {
    return std::vector<F>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  void append_row(const std::vector<F>& values) {
    require(rows_ == 0 || values.size() == cols_, ErrorCode::DimensionMismatch, "row length mismatch");
    if (rows_ == 0) cols_ = values.size();
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    require(a.cols_ == b.rows_, ErrorCode::DimensionMismatch, "matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const F& x = a(i, k);
        if (field_is_zero(x)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
      }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> data_;
};

using QMatrix = Matrix<Rational>;
using CycMatrix = Matrix<Cyc>;

// Reduced row echelon form in place; returns pivot columns. Rows past the
// rank are zero afterwards.
template <class F>
std::vector<std::size_t> rref(Matrix<F>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && field_is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const F inv = field_inverse(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || field_is_zero(m(i, c))) continue;
      const F factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!field_is_zero(m(r, j))) m(i, j) -= factor * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
std::size_t rank(Matrix<F> m) {
  return rref(m).size();
}

// Basis of the right kernel {v : m v = 0}, one vector per free column.
template <class F>
std::vector<std::vector<F>> kernel(Matrix<F> m) {
  const std::vector<std::size_t> pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(m.cols());
    v[free] = F(1L);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Row space basis in reduced echelon form.
template <class F>
Matrix<F> row_basis(Matrix<F> m) {
  const std::size_t rk = rref(m).size();
  Matrix<F> out(rk, m.cols());
  for (std::size_t i = 0; i < rk; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

template <class F>
Matrix<F> inverse(const Matrix<F>& m) {
  require(m.rows() == m.cols(), ErrorCode::DimensionMismatch, "inverse needs a square matrix");
  const std::size_t n = m.rows();
  Matrix<F> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = F(1L);
  }
  const auto pivots = rref(aug);
  require(pivots.size() == n && (n == 0 || pivots.back() == n - 1), ErrorCode::RankDeficient,
          "matrix is singular");
  Matrix<F> out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

// Determinant by Gaussian elimination.
template <class F>
F determinant(Matrix<F> m) {
  require(m.rows() == m.cols(), ErrorCode::DimensionMismatch, "determinant needs a square matrix");
  const std::size_t n = m.rows();
  F det(1L);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && field_is_zero(m(p, c))) ++p;
    if (p == n) return F(0L);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    const F inv = field_inverse(m(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (field_is_zero(m(i, c))) continue;
      const F factor = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= factor * m(c, j);
    }
  }
  return det;
}

// (I - S)(I + S)^-1 for a seeded random rational skew-symmetric S with
// entries a/b, |a| <= 5, 1 <= b <= 4.
QMatrix cayley_orthogonal(unsigned m, std::uint64_t seed);

// Bareiss determinant over the integers.
Integer bareiss_determinant(std::vector<std::vector<Integer>> m);

}  // namespace cwp
