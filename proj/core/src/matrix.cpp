#include "abelian/matrix.hpp"

#include <stdexcept>

namespace abelian {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::initializer_list<Int> entries)
    : rows_(rows), cols_(cols), data_(entries) {
  if (data_.size() != rows * cols)
    throw std::invalid_argument("Matrix: initializer size does not match shape");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
  const std::size_t m = rows.size();
  const std::size_t n = m == 0 ? 0 : rows.front().size();
  Matrix a(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    if (rows[i].size() != n) throw std::invalid_argument("Matrix::from_rows: ragged rows");
    for (std::size_t j = 0; j < n; ++j) a(i, j) = rows[i][j];
  }
  return a;
}

Vec Matrix::row(std::size_t i) const {
  Vec r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
  return r;
}

Vec Matrix::col(std::size_t j) const {
  Vec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

void Matrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
}

void Matrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
}

void Matrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& c) {
  for (std::size_t k = 0; k < cols_; ++k) (*this)(dst, k) += c * (*this)(src, k);
}

void Matrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& c) {
  for (std::size_t k = 0; k < rows_; ++k) (*this)(k, dst) += c * (*this)(k, src);
}

void Matrix::scale_row(std::size_t i, const Int& c) {
  for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) *= c;
}

void Matrix::negate_row(std::size_t i) { scale_row(i, -1); }

void Matrix::negate_col(std::size_t j) {
  for (std::size_t k = 0; k < rows_; ++k) (*this)(k, j) = -(*this)(k, j);
}

void Matrix::reduce_mod(const Int& m) {
  if (m == 0) return;
  for (auto& x : data_) x = mod_reduce(x, m);
}

void Matrix::reduce_row_mod(std::size_t i, const Int& m) {
  if (m == 0) return;
  for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) = mod_reduce((*this)(i, k), m);
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("Matrix product: shape mismatch");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

Vec Matrix::apply(const Vec& x) const {
  if (x.size() != cols_) throw std::invalid_argument("Matrix apply: shape mismatch");
  Vec y(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
  return y;
}

Int determinant(Matrix a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t pivot = k;
      while (pivot < n && a(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      a.swap_rows(k, pivot);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = exact_div(a(i, j) * a(k, k) - a(i, k) * a(k, j), prev);
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("Vec add: size mismatch");
  Vec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

Vec scaled(const Int& c, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

Int dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("Vec dot: size mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace abelian
