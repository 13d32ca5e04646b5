#include "polyprod/simplex.hpp"

#include <stdexcept>

namespace polyprod {

std::optional<QVector> find_nonnegative_solution(const QMatrix& a, std::span<const Rational> b) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (b.size() != m) throw std::invalid_argument("simplex: rhs size mismatch");
  if (m == 0) return QVector(n, Rational(0));

  // Columns 0..n-1 structural, n..n+m-1 artificial, last column rhs.
  const std::size_t width = n + m + 1;
  std::vector<QVector> t(m, QVector(width));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const int s = b[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = s * a(i, j);
    t[i][n + i] = 1;
    t[i][width - 1] = s * b[i];
    basis[i] = n + i;
  }
  // Reduced costs of the phase-1 objective (minimize the artificial sum).
  QVector cost(width);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < m; ++i) cost[j] -= t[i][j];
  for (std::size_t i = 0; i < m; ++i) cost[width - 1] -= t[i][width - 1];

  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j < n + m; ++j) {
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;

    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][width - 1] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    // Phase-1 objective is bounded below by zero.
    if (leave == m) throw std::logic_error("simplex: unbounded phase-1 ray");

    const Rational piv = t[leave][enter];
    for (auto& x : t[leave]) x /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational f = t[i][enter];
      for (std::size_t j = 0; j < width; ++j) t[i][j] -= f * t[leave][j];
    }
    if (cost[enter] != 0) {
      const Rational f = cost[enter];
      for (std::size_t j = 0; j < width; ++j) cost[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  if (cost[width - 1] != 0) return std::nullopt;
  QVector x(n);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = t[i][width - 1];
  return x;
}

}  // namespace polyprod
