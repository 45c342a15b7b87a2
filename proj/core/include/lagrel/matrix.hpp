#pragma once

#include <cstddef>
#include <vector>

#include "lagrel/field.hpp"

namespace lagrel {

// Dense matrix over an exact field.  Rows are the unit of meaning
// throughout the library: a subspace is stored as the row space of its
// reduced row echelon form, which makes equality structural.
class Matrix {
 public:
  Matrix(const Field& f, std::size_t rows, std::size_t cols);
  static Matrix identity(const Field& f, std::size_t n);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t r, std::size_t c);
  const Scalar& at(std::size_t r, std::size_t c) const;

  Matrix operator*(const Matrix& o) const;
  Matrix transpose() const;
  Matrix operator-() const;

  static Matrix vstack(const Matrix& top, const Matrix& bottom);
  static Matrix hstack(const Matrix& left, const Matrix& right);
  // Columns of the result are the requested columns, in the given order.
  Matrix select_cols(const std::vector<std::size_t>& idx) const;

  // Reduced row echelon form with zero rows dropped.  Pivot columns are
  // reported in row order when requested.
  Matrix rref(std::vector<std::size_t>* pivot_cols = nullptr) const;
  bool is_rref() const;
  std::size_t rank() const;

  // Basis of {v : (*this) v = 0}, one vector per row, in echelon form.
  Matrix kernel() const;

  // Subtracts row-space multiples to clear the pivot coordinates of v.
  // Requires *this to be in reduced row echelon form.
  std::vector<Scalar> reduce(std::vector<Scalar> v) const;
  bool row_space_contains(const std::vector<Scalar>& v) const;

  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> data_;
};

}  // namespace lagrel
