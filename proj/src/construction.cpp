#include "polyprod/construction.hpp"

#include "polyprod/positive.hpp"
#include "polyprod/product.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace polyprod {

namespace {

void put(QMatrix& m, std::size_t row, std::size_t col, const Vec2& v) {
  m(row, col) = v[0];
  m(row, col + 1) = v[1];
}

Rational orient(const QVector& a, const QVector& b, const QVector& c) {
  return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

constexpr int kMaxRounds = 12;

}  // namespace

void validate_params(const ConstructionParams& p) {
  if (p.n < 4) throw std::invalid_argument("n must be at least 4");
  if (p.n % 2 != 0 && !p.force) throw std::invalid_argument("n must be even");
  if (p.r < 2) throw std::invalid_argument("r must be at least 2");
  if (p.eps <= 0) throw std::invalid_argument("eps must be positive");
  if (p.big_m <= 1) throw std::invalid_argument("M must exceed 1");
}

QMatrix v_eps_block(int n, const Rational& eps, bool force) {
  if (n % 2 != 0 && !force) throw std::invalid_argument("n must be even");
  if (n < 3) throw std::invalid_argument("n must be at least 3");
  QMatrix v(static_cast<std::size_t>(n), 2);
  for (int i = 0; i < n - 1; ++i) {
    const Rational s = n - 2 - 2 * i;
    Rational x = 1 - eps * s * s;
    Rational y = eps * s;
    if (i % 2 == 1) {
      x *= eps;
      y *= eps;
    }
    v(static_cast<std::size_t>(i), 0) = x;
    v(static_cast<std::size_t>(i), 1) = y;
  }
  v(static_cast<std::size_t>(n - 1), 0) = -eps;
  v(static_cast<std::size_t>(n - 1), 1) = 0;
  return v;
}

QMatrix u_block(int n) {
  QMatrix u(static_cast<std::size_t>(n), 2);
  for (int i = 0; i < n; ++i) put(u, static_cast<std::size_t>(i), 0, i % 2 == 0 ? BlockSpec::u0() : BlockSpec::u1());
  return u;
}

QMatrix w_block(int n) {
  QMatrix w(static_cast<std::size_t>(n), 2);
  for (int i = 0; i < n; ++i) put(w, static_cast<std::size_t>(i), 0, i % 2 == 0 ? BlockSpec::w0() : BlockSpec::w1());
  return w;
}

QVector first_rhs(int n, const Rational& eps) {
  QVector b(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) b[static_cast<std::size_t>(i)] = i % 2 == 0 ? Rational(1) : eps;
  return b;
}

HPolytope build_deformed_product(const ConstructionParams& p) {
  validate_params(p);
  const auto n = static_cast<std::size_t>(p.n);
  const auto r = static_cast<std::size_t>(p.r);
  const QMatrix v = v_eps_block(p.n, p.eps, p.force);
  const QMatrix u = u_block(p.n);
  const QMatrix w = w_block(p.n);
  const QVector b1 = first_rhs(p.n, p.eps);

  HPolytope h;
  h.a = QMatrix(r * n, 2 * r);
  h.b.resize(r * n);
  h.labels.resize(r * n);
  Rational scale = 1;
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t row = k * n + i;
      for (std::size_t c = 0; c < 2; ++c) {
        h.a(row, 2 * k + c) = v(i, c);
        if (k >= 1) h.a(row, 2 * (k - 1) + c) = u(i, c);
        if (k >= 2) h.a(row, 2 * (k - 2) + c) = w(i, c);
      }
      h.b[row] = scale * b1[i];
      h.labels[row] = RowLabel{static_cast<int>(k) + 1, static_cast<int>(i)};
    }
    scale *= p.big_m;
  }
  return h;
}

HPolytope build_plain_product(int n, int r, const QMatrix& polygon, const QVector& rhs) {
  if (n < 3 || r < 1) throw std::invalid_argument("invalid (n, r)");
  if (polygon.rows() != static_cast<std::size_t>(n) || polygon.cols() != 2)
    throw std::invalid_argument("polygon block must be n x 2");
  if (rhs.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("rhs length must be n");
  if (auto check = check_polygon(polygon, rhs); !check.ok)
    throw std::invalid_argument("invalid polygon: " + check.reason);

  const auto nn = static_cast<std::size_t>(n);
  const auto rr = static_cast<std::size_t>(r);
  HPolytope h;
  h.a = QMatrix(rr * nn, 2 * rr);
  h.b.resize(rr * nn);
  h.labels.resize(rr * nn);
  for (std::size_t k = 0; k < rr; ++k)
    for (std::size_t i = 0; i < nn; ++i) {
      const std::size_t row = k * nn + i;
      h.a(row, 2 * k) = polygon(i, 0);
      h.a(row, 2 * k + 1) = polygon(i, 1);
      h.b[row] = rhs[i];
      h.labels[row] = RowLabel{static_cast<int>(k) + 1, static_cast<int>(i)};
    }
  return h;
}

PolygonCheck check_polygon(const QMatrix& v, const QVector& b) {
  const std::size_t n = v.rows();
  if (v.cols() != 2) return {false, "polygon block must have 2 columns"};
  if (b.size() != n) return {false, "rhs length differs from row count"};
  if (n < 3) return {false, "fewer than 3 rows"};

  std::vector<QVector> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    rows[i] = v.row_vector(i);
    if (rows[i][0] == 0 && rows[i][1] == 0) return {false, "row " + std::to_string(i) + " is zero"};
    for (std::size_t j = 0; j < i; ++j)
      if (rows[i] == rows[j]) return {false, "rows " + std::to_string(j) + " and " + std::to_string(i) + " coincide"};
  }
  for (std::size_t i = 0; i < n; ++i)
    if (b[i] <= 0) return {false, "rhs entry " + std::to_string(i) + " is not positive"};
  if (!positively_spans(rows, 2)) return {false, "rows do not positively span R^2"};

  std::vector<QVector> pts(n);
  for (std::size_t i = 0; i < n; ++i) pts[i] = {rows[i][0] / b[i], rows[i][1] / b[i]};
  int orientation = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = pts[i];
    const auto& c = pts[(i + 1) % n];
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || j == (i + 1) % n) continue;
      const int s = sgn(orient(a, c, pts[j]));
      if (s == 0 || (orientation != 0 && s != orientation))
        return {false, "rescaled rows not in strictly convex cyclic position (edge " + std::to_string(i) + ")"};
      orientation = s;
    }
  }
  return {true, {}};
}

bool validate_polygon(const QMatrix& v, const QVector& b) { return check_polygon(v, b).ok; }

std::pair<QMatrix, QVector> standard_polygon(int n) {
  if (n < 3) throw std::invalid_argument("n must be at least 3");
  // Rational points on the unit circle, (1-t^2, 2t)/(1+t^2) with
  // t ~ tan(theta/2) rounded to a fixed grid; angle order is preserved.
  QMatrix v(static_cast<std::size_t>(n), 2);
  for (int k = 0; k < n; ++k) {
    const auto row = static_cast<std::size_t>(k);
    if (2 * k == n) {
      v(row, 0) = -1;
      v(row, 1) = 0;
      continue;
    }
    const double theta = 2.0 * std::numbers::pi * k / n;
    const long grid = 1000;
    Rational t(static_cast<long>(std::lround(std::tan(theta / 2) * grid)), grid);
    t.canonicalize();
    const Rational den = 1 + t * t;
    v(row, 0) = (1 - t * t) / den;
    v(row, 1) = 2 * t / den;
  }
  return {v, QVector(static_cast<std::size_t>(n), Rational(1))};
}

std::string try_parameters(const ConstructionParams& p, Exec exec) {
  const QMatrix v = v_eps_block(p.n, p.eps, p.force);
  if (auto check = check_polygon(v, first_rhs(p.n, p.eps)); !check.ok) return "polygon: " + check.reason;
  const HPolytope h = build_deformed_product(p);
  VPolytope vp;
  try {
    vp = h_to_v(h, exec);
  } catch (const PolytopeError& e) {
    return std::string("vertex enumeration: ") + e.what();
  }
  auto product = check_product(vp, h.labels, p.n, p.r);
  if (!product.labeling) return "product: " + product.failure;
  return {};
}

ConstructionParams adapt_parameters(ConstructionParams p, bool adapt_eps, bool adapt_m, Exec exec) {
  validate_params(p);
  const int rounds = (adapt_eps || adapt_m) ? kMaxRounds : 1;
  for (int round = 0; round < rounds; ++round) {
    std::string failure = try_parameters(p, exec);
    if (failure.empty()) {
      p.adaptation_log.push_back({p.eps, p.big_m, "accepted"});
      return p;
    }
    p.adaptation_log.push_back({p.eps, p.big_m, failure});
    if (rounds == 1) throw std::runtime_error("parameters rejected: " + failure);
    if (adapt_eps) p.eps /= 2;
    if (adapt_m) p.big_m *= p.big_m;
  }
  throw std::runtime_error("no parameters found");
}

ConstructionParams initial_parameters(int n, int r, bool force) {
  ConstructionParams p;
  p.n = n;
  p.r = r;
  p.force = force;
  p.eps = Rational(1, 4 * (n - 2) * (n - 2) + 4);
  p.big_m = Rational(n * n);
  return p;
}

ConstructionParams choose_parameters(int n, int r, Exec exec) {
  return adapt_parameters(initial_parameters(n, r), true, true, exec);
}

}  // namespace polyprod
