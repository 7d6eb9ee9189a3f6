#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "kronecker/errors.hpp"
#include "kronecker/numeric.hpp"

namespace kronecker {

/// Dense row-major matrix over Q. Zero-row and zero-column shapes are valid
/// and carry their shape explicitly.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  ExactMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw InvalidParameter("ragged matrix literal");
      for (long long x : row) data_.emplace_back(x);
    }
  }

  static ExactMatrix identity(std::size_t size) {
    ExactMatrix m(size, size);
    for (std::size_t i = 0; i < size; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  ExactMatrix transposed() const {
    ExactMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  /// Rows [first, first + count) as a new matrix.
  ExactMatrix row_block(std::size_t first, std::size_t count) const {
    ExactMatrix out(count, cols_);
    std::copy(data_.begin() + static_cast<std::ptrdiff_t>(first * cols_),
              data_.begin() + static_cast<std::ptrdiff_t>((first + count) * cols_), out.data_.begin());
    return out;
  }

  /// Columns [first, first + count) as a new matrix.
  ExactMatrix col_block(std::size_t first, std::size_t count) const {
    ExactMatrix out(rows_, count);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < count; ++c) out(r, c) = (*this)(r, first + c);
    return out;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x == 0; });
  }

  bool is_integral() const {
    return std::all_of(data_.begin(), data_.end(),
                       [](const Rational& x) { return denominator(x) == 1; });
  }

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

  friend ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y) {
    if (x.cols_ != y.rows_) throw InvalidParameter("matrix product shape mismatch");
    ExactMatrix out(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        const Rational& xik = x(i, k);
        if (xik == 0) continue;
        for (std::size_t j = 0; j < y.cols_; ++j)
          if (y(k, j) != 0) out(i, j) += xik * y(k, j);
      }
    return out;
  }

  friend ExactMatrix operator-(const ExactMatrix& x, const ExactMatrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw InvalidParameter("matrix difference shape mismatch");
    ExactMatrix out = x;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= y.data_[i];
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Stack blocks vertically; all blocks share the column count `cols`.
inline ExactMatrix vstack(std::span<const ExactMatrix> blocks, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw InvalidParameter("vstack column mismatch");
    rows += b.rows();
  }
  ExactMatrix out(rows, cols);
  std::size_t at = 0;
  for (const auto& b : blocks)
    for (std::size_t r = 0; r < b.rows(); ++r, ++at)
      for (std::size_t c = 0; c < cols; ++c) out(at, c) = b(r, c);
  return out;
}

/// Concatenate blocks horizontally; all blocks share the row count `rows`.
inline ExactMatrix hstack(std::span<const ExactMatrix> blocks, std::size_t rows) {
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw InvalidParameter("hstack row mismatch");
    cols += b.cols();
  }
  ExactMatrix out(rows, cols);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, offset + c) = b(r, c);
    offset += b.cols();
  }
  return out;
}

struct EchelonForm {
  ExactMatrix reduced;
  std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form by Gauss-Jordan elimination over Q.
/// Pivots are taken in column order, first nonzero row, so the result is
/// canonical for the row space.
inline EchelonForm rref(ExactMatrix m) {
  EchelonForm out;
  std::size_t rank = 0;
  const std::size_t rows = m.rows(), cols = m.cols();
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(pivot, j), m(rank, j));
    const Rational inv = 1 / m(rank, c);
    for (std::size_t j = c; j < cols; ++j)
      if (m(rank, j) != 0) m(rank, j) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m(r, c) == 0) continue;
      const Rational factor = m(r, c);
      for (std::size_t j = c; j < cols; ++j)
        if (m(rank, j) != 0) m(r, j) -= factor * m(rank, j);
    }
    out.pivot_cols.push_back(c);
    ++rank;
  }
  out.reduced = std::move(m);
  return out;
}

inline std::size_t rank(const ExactMatrix& m) { return rref(m).pivot_cols.size(); }

/// Scales a rational vector to the primitive integer vector on the same ray
/// (positive leading entry is not enforced; the direction is kept).
inline void make_primitive(std::vector<Rational>& v) {
  Integer den_lcm = 1;
  for (const auto& x : v)
    if (x != 0) den_lcm = lcm(den_lcm, denominator(x));
  Integer num_gcd = 0;
  for (auto& x : v) {
    x *= den_lcm;
    if (x != 0) num_gcd = gcd(num_gcd, numerator(x));
  }
  if (num_gcd > 1)
    for (auto& x : v) x /= num_gcd;
}

/// Basis of {x : m x = 0} as the columns of a (cols x k) matrix. One basis
/// vector per free column of the RREF, scaled to a primitive integer vector.
inline ExactMatrix right_nullspace(const ExactMatrix& m) {
  const EchelonForm e = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  ExactMatrix basis(cols, free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::vector<Rational> v(cols);
    v[free_cols[k]] = 1;
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) v[e.pivot_cols[r]] = -e.reduced(r, free_cols[k]);
    make_primitive(v);
    for (std::size_t c = 0; c < cols; ++c) basis(c, k) = v[c];
  }
  return basis;
}

/// Basis of {y : y m = 0} as the rows of a (k x rows) matrix.
inline ExactMatrix left_nullspace(const ExactMatrix& m) { return right_nullspace(m.transposed()).transposed(); }

}  // namespace kronecker
