#pragma once

// Dense matrices over any ring of the library, a division-free determinant
// and exact linear solving over fields.

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "coverforge/ring/concepts.hpp"

namespace coverforge {

template <CommutativeRing R>
class Matrix {
 public:
  Matrix() = default;
  /// rows x cols zero matrix; `zero` fixes the ring of the entries.
  Matrix(std::size_t rows, std::size_t cols, const R& zero)
      : rows_(rows), cols_(cols), zero_(zero_like(zero)),
        data_(rows * cols, zero_like(zero)) {}

  static Matrix identity(std::size_t n, const R& zero) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one_like(zero);
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<R>>& rows,
                          const R& zero) {
    std::size_t c = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), c, zero);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw InvalidInput("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const R& zero() const { return zero_; }

  R& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const R& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InvalidInput("matrix shape mismatch");
    Matrix r(a.rows_, b.cols_, a.zero_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (is_zero(a(i, k))) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          r(i, j) = r(i, j) + a(i, k) * b(k, j);
      }
    return r;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::vector<R> apply(const std::vector<R>& x) const {
    if (x.size() != cols_) throw InvalidInput("vector length mismatch");
    std::vector<R> y(rows_, zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) y[i] = y[i] + (*this)(i, j) * x[j];
    return y;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  /// row[dst] += c * row[src]
  void add_row(std::size_t dst, std::size_t src, const R& c) {
    for (std::size_t j = 0; j < cols_; ++j)
      (*this)(dst, j) = (*this)(dst, j) + c * (*this)(src, j);
  }
  /// col[dst] += c * col[src]
  void add_col(std::size_t dst, std::size_t src, const R& c) {
    for (std::size_t i = 0; i < rows_; ++i)
      (*this)(i, dst) = (*this)(i, dst) + c * (*this)(i, src);
  }
  void scale_row(std::size_t i, const R& c) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = c * (*this)(i, j);
  }
  void scale_col(std::size_t j, const R& c) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = c * (*this)(i, j);
  }

  bool is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (i != j && !is_zero((*this)(i, j))) return false;
    return true;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      s += i ? ", [" : "[";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) s += ", ";
        s += coverforge::to_string((*this)(i, j));
      }
      s += "]";
    }
    return s + "]";
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  R zero_{};
  std::vector<R> data_;
};

/// Determinant by Laplace expansion along rows with memoised column subsets.
/// Uses only ring operations, so it is valid over any commutative ring.
/// Cost is O(2^n n); intended for n up to about 20.
template <CommutativeRing R>
R determinant(const Matrix<R>& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw InvalidInput("determinant of non-square matrix");
  if (n == 0) return one_like(m.zero());
  if (n > 24) throw CapabilityError("division-free determinant beyond 24x24");
  // minor[mask] = det of rows (n - popcount(mask))..n-1 restricted to
  // the columns in mask
  std::unordered_map<unsigned long, R> memo;
  auto rec = [&](auto& self, unsigned long mask, std::size_t row) -> R {
    if (row == n) return one_like(m.zero());
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    R total = zero_like(m.zero());
    int sign_pos = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(mask >> j & 1ul)) continue;
      if (!is_zero(m(row, j))) {
        R sub = self(self, mask & ~(1ul << j), row + 1);
        R term = m(row, j) * sub;
        total = (sign_pos % 2 == 0) ? R(total + term) : R(total - term);
      }
      ++sign_pos;
    }
    memo.emplace(mask, total);
    return total;
  };
  return rec(rec, (1ul << n) - 1, 0);
}

/// Row echelon data over a field: rank and a solution of A x = b if one
/// exists (free variables set to zero).
template <CommutativeRing K>
  requires is_field_v<K>
std::optional<std::vector<K>> solve_over_field(Matrix<K> a, std::vector<K> b) {
  const std::size_t m = a.rows(), n = a.cols();
  if (b.size() != m) throw InvalidInput("right-hand side length mismatch");
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && is_zero(a(p, c))) ++p;
    if (p == m) continue;
    a.swap_rows(p, r);
    std::swap(b[p], b[r]);
    K inv = *try_inverse(a(r, c));
    a.scale_row(r, inv);
    b[r] = inv * b[r];
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || is_zero(a(i, c))) continue;
      K f = -a(i, c);
      a.add_row(i, r, f);
      b[i] = b[i] + f * b[r];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i)
    if (!is_zero(b[i])) return std::nullopt;
  std::vector<K> x(n, a.zero());
  for (std::size_t i = 0; i < r; ++i) x[pivot_cols[i]] = b[i];
  return x;
}

template <CommutativeRing K>
  requires is_field_v<K>
std::size_t rank_over_field(Matrix<K> a) {
  const std::size_t m = a.rows(), n = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && is_zero(a(p, c))) ++p;
    if (p == m) continue;
    a.swap_rows(p, r);
    K inv = *try_inverse(a(r, c));
    for (std::size_t i = r + 1; i < m; ++i) {
      if (is_zero(a(i, c))) continue;
      a.add_row(i, r, -(a(i, c) * inv));
    }
    ++r;
  }
  return r;
}

}  // namespace coverforge
