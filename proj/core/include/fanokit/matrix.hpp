#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "fanokit/field.hpp"

namespace fanokit {

/// Dense row-major matrix over a single Field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(Field field, std::size_t n);
  static Matrix from_rows(Field field, const std::vector<std::vector<Scalar>>& rows);
  static Matrix from_ints(Field field, std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Field& field() const noexcept { return field_; }

  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  std::vector<Scalar> row(std::size_t i) const;
  Matrix transpose() const;
  /// The submatrix on the given row and column positions, in the given order.
  Matrix select(std::span<const std::size_t> row_ids, std::span<const std::size_t> col_ids) const;
  Matrix select_columns(std::span<const std::size_t> col_ids) const;
  /// Rows of `top` followed by rows of `bottom`.
  static Matrix vstack(const Matrix& top, const Matrix& bottom);
  static Matrix hstack(const Matrix& left, const Matrix& right);

  bool is_zero() const;
  bool operator==(const Matrix& other) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  Matrix scaled(const Scalar& c) const;

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Exact determinant. Over Q the rows are cleared of denominators and
/// reduced with Bareiss fraction-free elimination.
Scalar det(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Reduced row echelon form. Pivots are chosen as the first nonzero entry of
/// each column among the remaining rows; `pivots` receives pivot columns.
Matrix rref(const Matrix& m, std::vector<std::size_t>* pivots = nullptr);

/// All minors of order rows(m), ordered lexicographically by increasing
/// column multi-index.
std::vector<Scalar> maximal_minors(const Matrix& m);

/// Basis of the right null space {v : m v = 0}.
std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m);

std::vector<Scalar> multiply(const Matrix& m, std::span<const Scalar> v);

}  // namespace fanokit
