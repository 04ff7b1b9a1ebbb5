#pragma once

#include "abelian/integer.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace abelian {

using Vec = std::vector<Int>;

/// Dense matrix of unbounded integers, row major. Zero-dimensional shapes
/// (0 x n, m x 0) are valid and behave as empty maps.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::initializer_list<Int> entries);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  /// row[dst] += c * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& c);
  /// col[dst] += c * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Int& c);
  void scale_row(std::size_t i, const Int& c);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  /// Entrywise reduction into [0, m); no-op for m == 0.
  void reduce_mod(const Int& m);
  /// Reduces row i into [0, m).
  void reduce_row_mod(std::size_t i, const Int& m);

  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  Vec apply(const Vec& x) const;  // matrix * column vector

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// Exact determinant (Bareiss fraction-free elimination).
Int determinant(Matrix a);

Vec add(const Vec& a, const Vec& b);
Vec scaled(const Int& c, const Vec& a);
Int dot(const Vec& a, const Vec& b);

}  // namespace abelian
