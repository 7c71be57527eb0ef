#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "strat/errors.hpp"

namespace strat {

/// Dense row-major matrix. T needs +, -, * and ==; the zero element is
/// supplied explicitly because ring elements carry their ring.
template <class T>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, T zero)
      : rows_(rows), cols_(cols), zero_(zero), data_(rows * cols, std::move(zero)) {}

  static Matrix identity(std::size_t n, const T& zero, const T& one) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const T& zero() const noexcept { return zero_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!(x == zero_)) return false;
    return true;
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_, zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix b(nr, nc, zero_);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
    return c;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const T& k) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) = (*this)(dst, j) + k * (*this)(src, j);
  }

  /// col[dst] += k * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const T& k) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) = (*this)(i, dst) + (*this)(i, src) * k;
  }

  void scale_row(std::size_t r, const T& k) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = k * (*this)(r, j);
  }

  void scale_col(std::size_t c, const T& k) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = (*this)(i, c) * k;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error("matrix shape mismatch in product");
    Matrix c(a.rows_, b.cols_, a.zero_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (x == a.zero_) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = c(i, j) + x * b(k, j);
      }
    return c;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix shape mismatch in sum");
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] = a.data_[i] + b.data_[i];
    return c;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix shape mismatch in difference");
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] = a.data_[i] - b.data_[i];
    return c;
  }

  friend Matrix operator*(const T& k, const Matrix& a) {
    Matrix c = a;
    for (auto& x : c.data_) x = k * x;
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_, cols_;
  T zero_;
  std::vector<T> data_;
};

/// Block-diagonal sum diag(a, b).
template <class T>
Matrix<T> block_diagonal(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> m(a.rows() + b.rows(), a.cols() + b.cols(), a.zero());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

}  // namespace strat
