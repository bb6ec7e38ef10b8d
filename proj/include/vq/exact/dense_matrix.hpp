#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "vq/errors.hpp"
#include "vq/exact/rational.hpp"

namespace vq {

namespace detail {
inline bool scalar_is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool scalar_is_zero(const GaussianRational& x) { return x.is_zero(); }
inline Rational scalar_conj(const Rational& x) { return x; }
inline GaussianRational scalar_conj(const GaussianRational& x) { return x.conj(); }
}  // namespace detail

/// Row-major dense matrix over an exact scalar type (Rational or GaussianRational).
template <typename T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) throw ConfigError("matrix entry count does not match dimensions");
  }

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] bool is_zero() const {
    for (const auto& x : data_)
      if (!detail::scalar_is_zero(x)) return false;
    return true;
  }

  DenseMatrix& operator+=(const DenseMatrix& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  DenseMatrix& operator-=(const DenseMatrix& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  DenseMatrix& operator*=(const T& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
  friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) { return a -= b; }
  friend DenseMatrix operator*(DenseMatrix a, const T& s) { return a *= s; }
  friend DenseMatrix operator*(const T& s, DenseMatrix a) { return a *= s; }

  // Skips zero entries of the left factor; the realizations multiplied here are
  // shift operators with one or two non-zero diagonals.
  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols_ != b.rows_) throw ConfigError("matrix product dimension mismatch");
    DenseMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (detail::scalar_is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const T& bkj = b(k, j);
          if (detail::scalar_is_zero(bkj)) continue;
          out(i, j) += aik * bkj;
        }
      }
    }
    return out;
  }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  [[nodiscard]] DenseMatrix transpose() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Conjugate transpose with respect to the standard inner product.
  [[nodiscard]] DenseMatrix conjugate_transpose() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = detail::scalar_conj((*this)(i, j));
    return t;
  }

  [[nodiscard]] DenseMatrix power(unsigned e) const {
    if (!is_square()) throw ConfigError("power of a non-square matrix");
    DenseMatrix result = identity(rows_);
    for (unsigned i = 0; i < e; ++i) result = result * *this;
    return result;
  }

  /// Fraction-free (Bareiss) determinant; exact over a field.
  [[nodiscard]] T determinant() const {
    if (!is_square()) throw ConfigError("determinant of a non-square matrix");
    const std::size_t n = rows_;
    if (n == 0) return T(1);
    DenseMatrix a = *this;
    T sign(1);
    T prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (detail::scalar_is_zero(a(k, k))) {
        std::size_t swap_row = k + 1;
        while (swap_row < n && detail::scalar_is_zero(a(swap_row, k))) ++swap_row;
        if (swap_row == n) return T(0);
        for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap_row, c));
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        }
      }
      prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
  }

  /// Gauss-Jordan inverse; throws SingularError on a zero pivot column.
  [[nodiscard]] DenseMatrix inverse() const {
    if (!is_square()) throw ConfigError("inverse of a non-square matrix");
    const std::size_t n = rows_;
    DenseMatrix a = *this;
    DenseMatrix inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t pivot = col;
      while (pivot < n && detail::scalar_is_zero(a(pivot, col))) ++pivot;
      if (pivot == n) throw SingularError("matrix is singular");
      if (pivot != col) {
        for (std::size_t c = 0; c < n; ++c) {
          std::swap(a(col, c), a(pivot, c));
          std::swap(inv(col, c), inv(pivot, c));
        }
      }
      const T scale = T(1) / a(col, col);
      for (std::size_t c = 0; c < n; ++c) {
        a(col, c) *= scale;
        inv(col, c) *= scale;
      }
      for (std::size_t r = 0; r < n; ++r) {
        if (r == col || detail::scalar_is_zero(a(r, col))) continue;
        const T factor = a(r, col);
        for (std::size_t c = 0; c < n; ++c) {
          a(r, c) -= factor * a(col, c);
          inv(r, c) -= factor * inv(col, c);
        }
      }
    }
    return inv;
  }

  [[nodiscard]] std::vector<T> solve(const std::vector<T>& rhs) const {
    if (rhs.size() != rows_) throw ConfigError("right-hand side length mismatch");
    const DenseMatrix inv = inverse();
    std::vector<T> x(cols_);
    for (std::size_t i = 0; i < cols_; ++i)
      for (std::size_t j = 0; j < rows_; ++j) x[i] += inv(i, j) * rhs[j];
    return x;
  }

 private:
  void require_same_shape(const DenseMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ConfigError("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = DenseMatrix<Rational>;
using GaussianMatrix = DenseMatrix<GaussianRational>;

/// Kronecker product; used to tensor a bosonic carrier with the Clifford module.
template <typename T>
DenseMatrix<T> kronecker(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
  DenseMatrix<T> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (detail::scalar_is_zero(a(i, j))) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

}  // namespace vq
