#ifndef POLYPROD_MATRIX_HPP
#define POLYPROD_MATRIX_HPP

#include "polyprod/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace polyprod {

using QVector = std::vector<Rational>;
using ZVector = std::vector<Integer>;

// Dense exact-rational matrix, row-major.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  // All rows must have length `cols`; `cols` is needed for the 0-row case.
  static QMatrix from_rows(std::span<const QVector> rows, std::size_t cols);
  static QMatrix from_rows(std::initializer_list<QVector> rows);
  static QMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Rational> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<Rational> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  QVector row_vector(std::size_t i) const;

  QMatrix transpose() const;
  QMatrix select_rows(std::span<const std::size_t> indices) const;
  QVector multiply(std::span<const Rational> x) const;

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

// Positive multiple of `v` that is a primitive integer vector (gcd 1).
// The zero vector maps to zeros.
ZVector primitive_integer(std::span<const Rational> v);

// Exact rank by fraction-free (Bareiss) elimination on integer-scaled rows.
std::size_t rank(const QMatrix& m);

// Throws std::invalid_argument for non-square input.
Rational determinant(const QMatrix& m);

// Dimension of the affine hull of the points; -1 for an empty set.
int affine_dimension(std::span<const QVector> points);

// Incremental row echelon basis over Q; used where rank is queried while
// vectors stream in.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim) : dim_(dim) {}
  // Returns true iff v was independent of the rows added so far.
  bool add(std::span<const Rational> v);
  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }
  // Basis of the vectors orthogonal to every row added so far.
  std::vector<QVector> null_space() const;

 private:
  std::size_t dim_;
  std::vector<QVector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace polyprod

#endif  // POLYPROD_MATRIX_HPP
