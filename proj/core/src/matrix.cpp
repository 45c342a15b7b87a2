#include "lagrel/matrix.hpp"

#include <string>

namespace lagrel {

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Scalar& Matrix::at(std::size_t r, std::size_t c) {
  if (r >= rows_ || c >= cols_) {
    throw Error(Errc::index_out_of_range,
                "matrix entry (" + std::to_string(r) + ", " +
                    std::to_string(c) + ")");
  }
  return data_[r * cols_ + c];
}

const Scalar& Matrix::at(std::size_t r, std::size_t c) const {
  return const_cast<Matrix*>(this)->at(r, c);
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (field_ != o.field_) {
    throw Error(Errc::mixed_fields, "matrix product across fields");
  }
  if (cols_ != o.rows_) {
    throw Error(Errc::dimension_mismatch,
                "matrix product " + std::to_string(cols_) + " by " +
                    std::to_string(o.rows_));
  }
  Matrix r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        r.at(i, j) += a * o.at(k, j);
      }
    }
  }
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  }
  return r;
}

Matrix Matrix::operator-() const {
  Matrix r = *this;
  for (auto& s : r.data_) s = -s;
  return r;
}

Matrix Matrix::vstack(const Matrix& top, const Matrix& bottom) {
  if (top.field_ != bottom.field_) {
    throw Error(Errc::mixed_fields, "stacking matrices across fields");
  }
  if (top.cols_ != bottom.cols_) {
    throw Error(Errc::dimension_mismatch,
                "vertical stack of widths " + std::to_string(top.cols_) +
                    " and " + std::to_string(bottom.cols_));
  }
  Matrix r(top.field_, top.rows_ + bottom.rows_, top.cols_);
  r.data_ = top.data_;
  r.data_.insert(r.data_.end(), bottom.data_.begin(), bottom.data_.end());
  return r;
}

Matrix Matrix::hstack(const Matrix& left, const Matrix& right) {
  if (left.field_ != right.field_) {
    throw Error(Errc::mixed_fields, "stacking matrices across fields");
  }
  if (left.rows_ != right.rows_) {
    throw Error(Errc::dimension_mismatch,
                "horizontal stack of heights " + std::to_string(left.rows_) +
                    " and " + std::to_string(right.rows_));
  }
  Matrix r(left.field_, left.rows_, left.cols_ + right.cols_);
  for (std::size_t i = 0; i < r.rows_; ++i) {
    for (std::size_t j = 0; j < left.cols_; ++j) r.at(i, j) = left.at(i, j);
    for (std::size_t j = 0; j < right.cols_; ++j) {
      r.at(i, left.cols_ + j) = right.at(i, j);
    }
  }
  return r;
}

Matrix Matrix::select_cols(const std::vector<std::size_t>& idx) const {
  Matrix r(field_, rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < idx.size(); ++j) r.at(i, j) = at(i, idx[j]);
  }
  return r;
}

Matrix Matrix::rref(std::vector<std::size_t>* pivot_cols) const {
  Matrix r = *this;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t pr = row;
    while (pr < rows_ && r.at(pr, col).is_zero()) ++pr;
    if (pr == rows_) continue;
    for (std::size_t j = 0; j < cols_; ++j) {
      std::swap(r.at(row, j), r.at(pr, j));
    }
    Scalar inv = r.at(row, col).inverse();
    for (std::size_t j = col; j < cols_; ++j) r.at(row, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row || r.at(i, col).is_zero()) continue;
      Scalar factor = r.at(i, col);
      for (std::size_t j = col; j < cols_; ++j) {
        r.at(i, j) -= factor * r.at(row, j);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  Matrix out(field_, row, cols_);
  for (std::size_t i = 0; i < row; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = r.at(i, j);
  }
  if (pivot_cols) *pivot_cols = std::move(pivots);
  return out;
}

bool Matrix::is_rref() const {
  std::size_t prev_pivot = 0;
  bool first = true;
  for (std::size_t i = 0; i < rows_; ++i) {
    std::size_t p = 0;
    while (p < cols_ && at(i, p).is_zero()) ++p;
    if (p == cols_) return false;
    if (!first && p <= prev_pivot) return false;
    if (!at(i, p).is_one()) return false;
    for (std::size_t k = 0; k < rows_; ++k) {
      if (k != i && !at(k, p).is_zero()) return false;
    }
    prev_pivot = p;
    first = false;
  }
  return true;
}

std::size_t Matrix::rank() const { return rref().rows(); }

Matrix Matrix::kernel() const {
  std::vector<std::size_t> pivots;
  Matrix r = rref(&pivots);
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  Matrix k(field_, free_cols.size(), cols_);
  for (std::size_t idx = 0; idx < free_cols.size(); ++idx) {
    std::size_t fc = free_cols[idx];
    k.at(idx, fc) = Scalar::one(field_);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      k.at(idx, pivots[i]) = -r.at(i, fc);
    }
  }
  return k.rref();
}

std::vector<Scalar> Matrix::reduce(std::vector<Scalar> v) const {
  if (v.size() != cols_) {
    throw Error(Errc::dimension_mismatch,
                "reducing a vector of length " + std::to_string(v.size()) +
                    " against width " + std::to_string(cols_));
  }
  for (std::size_t i = 0; i < rows_; ++i) {
    std::size_t p = 0;
    while (p < cols_ && at(i, p).is_zero()) ++p;
    if (p == cols_) continue;
    Scalar factor = v[p];
    if (factor.is_zero()) continue;
    for (std::size_t j = p; j < cols_; ++j) v[j] -= factor * at(i, j);
  }
  return v;
}

bool Matrix::row_space_contains(const std::vector<Scalar>& v) const {
  std::vector<Scalar> rem = reduce(v);
  for (const Scalar& s : rem) {
    if (!s.is_zero()) return false;
  }
  return true;
}

bool Matrix::operator==(const Matrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ &&
         data_ == o.data_;
}

}  // namespace lagrel
