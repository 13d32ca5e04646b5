#include "polyprod/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace polyprod {

namespace {

using ZMatrix = std::vector<ZVector>;

ZMatrix integer_rows(const QMatrix& m) {
  ZMatrix out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) out[i] = primitive_integer(m.row(i));
  return out;
}

// Bareiss elimination in place; returns the rank and the sign of the row
// permutation. After the call, the last pivot is the determinant of the
// leading minor (for square full-rank input, the determinant).
struct BareissResult {
  std::size_t rank = 0;
  int sign = 1;
  Integer last_pivot = 1;
};

BareissResult bareiss(ZMatrix& a, std::size_t cols) {
  BareissResult res;
  const std::size_t rows = a.size();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      std::swap(a[pivot], a[r]);
      res.sign = -res.sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  res.rank = r;
  res.last_pivot = prev;
  return res;
}

}  // namespace

QMatrix QMatrix::from_rows(std::span<const QVector> rows, std::size_t cols) {
  QMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("QMatrix: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

QMatrix QMatrix::from_rows(std::initializer_list<QVector> rows) {
  const std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
  return from_rows(std::span<const QVector>(rows.begin(), rows.size()), cols);
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QVector QMatrix::row_vector(std::size_t i) const {
  auto r = row(i);
  return {r.begin(), r.end()};
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

QMatrix QMatrix::select_rows(std::span<const std::size_t> indices) const {
  QMatrix s(indices.size(), cols_);
  for (std::size_t k = 0; k < indices.size(); ++k)
    for (std::size_t j = 0; j < cols_; ++j) s(k, j) = (*this)(indices[k], j);
  return s;
}

QVector QMatrix::multiply(std::span<const Rational> x) const {
  if (x.size() != cols_) throw std::invalid_argument("QMatrix::multiply: size mismatch");
  QVector y(rows_);
  for (std::size_t i = 0; i < rows_; ++i) y[i] = dot(row(i), x);
  return y;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

ZVector primitive_integer(std::span<const Rational> v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  ZVector z(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    z[i] = v[i].get_num() * (l / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z[i].get_mpz_t());
  }
  if (g > 1)
    for (auto& x : z) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return z;
}

std::size_t rank(const QMatrix& m) {
  ZMatrix a = integer_rows(m);
  return bareiss(a, m.cols()).rank;
}

Rational determinant(const QMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Row i was scaled by a positive rational s_i to become integral.
  ZMatrix a(n);
  Rational scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = primitive_integer(m.row(i));
    for (std::size_t j = 0; j < n; ++j) {
      if (m(i, j) != 0) {
        scale *= Rational(a[i][j]) / m(i, j);
        break;
      }
    }
  }
  const auto res = bareiss(a, n);
  if (res.rank < n) return 0;
  Rational det(res.last_pivot * res.sign);
  det /= scale;
  det.canonicalize();
  return det;
}

int affine_dimension(std::span<const QVector> points) {
  if (points.empty()) return -1;
  const std::size_t d = points.front().size();
  EchelonBasis basis(d);
  QVector diff(d);
  for (std::size_t i = 1; i < points.size() && basis.rank() < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) diff[j] = points[i][j] - points[0][j];
    basis.add(diff);
  }
  return static_cast<int>(basis.rank());
}

bool EchelonBasis::add(std::span<const Rational> v) {
  if (v.size() != dim_) throw std::invalid_argument("EchelonBasis::add: size mismatch");
  if (rows_.size() == dim_) return false;
  QVector w(v.begin(), v.end());
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::size_t p = pivots_[k];
    if (w[p] == 0) continue;
    const Rational f = w[p];
    for (std::size_t j = p; j < dim_; ++j) w[j] -= f * rows_[k][j];
  }
  std::size_t p = 0;
  while (p < dim_ && w[p] == 0) ++p;
  if (p == dim_) return false;
  const Rational inv = 1 / w[p];
  for (std::size_t j = p; j < dim_; ++j) w[j] *= inv;
  // keep the basis fully reduced so later reductions see each pivot once
  for (auto& row : rows_) {
    if (row[p] == 0) continue;
    const Rational f = row[p];
    for (std::size_t j = p; j < dim_; ++j) row[j] -= f * w[j];
  }
  rows_.push_back(std::move(w));
  pivots_.push_back(p);
  return true;
}

std::vector<QVector> EchelonBasis::null_space() const {
  std::vector<bool> pivot(dim_, false);
  for (auto p : pivots_) pivot[p] = true;
  std::vector<QVector> out;
  for (std::size_t f = 0; f < dim_; ++f) {
    if (pivot[f]) continue;
    QVector x(dim_);
    x[f] = 1;
    for (std::size_t k = 0; k < rows_.size(); ++k) x[pivots_[k]] = -rows_[k][f];
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace polyprod
