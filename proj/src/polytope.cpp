#include "polyprod/polytope.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>

namespace polyprod {

namespace {

struct Ray {
  ZVector coords;
  IndexSet zeros;  // processed constraints tight on this ray
};

Integer eval(const ZVector& g, const ZVector& y) {
  Integer s = 0;
  for (std::size_t i = 0; i < g.size(); ++i) s += g[i] * y[i];
  return s;
}

void make_primitive(ZVector& v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1)
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

// Inverse of a nonsingular square rational matrix (Gauss-Jordan).
QMatrix inverse(const QMatrix& m) {
  const std::size_t n = m.rows();
  QMatrix a = m;
  QMatrix inv = QMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (a(p, c) == 0) ++p;
    if (p != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    const Rational piv = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

// Extreme rays of the pointed cone { y : g_i . y >= 0 }.
std::vector<Ray> double_description(const std::vector<ZVector>& g, std::size_t dim, Exec exec) {
  const std::size_t m = g.size();

  // Initial simplicial cone from the first independent rows in index order.
  std::vector<std::size_t> basis;
  {
    EchelonBasis eb(dim);
    QVector row(dim);
    for (std::size_t i = 0; i < m && basis.size() < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) row[j] = g[i][j];
      if (eb.add(row)) basis.push_back(i);
    }
  }
  if (basis.size() < dim) throw PolytopeError(PolytopeError::Kind::unbounded, "unbounded");

  QMatrix gb(dim, dim);
  for (std::size_t k = 0; k < dim; ++k)
    for (std::size_t j = 0; j < dim; ++j) gb(k, j) = g[basis[k]][j];
  const QMatrix inv = inverse(gb);

  std::vector<Ray> rays;
  for (std::size_t j = 0; j < dim; ++j) {
    QVector col(dim);
    for (std::size_t i = 0; i < dim; ++i) col[i] = inv(i, j);
    Ray ray{primitive_integer(col), IndexSet(m)};
    for (std::size_t k = 0; k < dim; ++k)
      if (k != j) ray.zeros.set(basis[k]);
    rays.push_back(std::move(ray));
  }

  std::vector<bool> in_basis(m, false);
  for (auto i : basis) in_basis[i] = true;

  for (std::size_t h = 0; h < m; ++h) {
    if (in_basis[h]) continue;
    std::vector<int> sign(rays.size());
    std::vector<Integer> value(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      value[r] = eval(g[h], rays[r].coords);
      sign[r] = sgn(value[r]);
      if (sign[r] > 0) pos.push_back(r);
      if (sign[r] < 0) neg.push_back(r);
    }
    if (neg.empty()) {
      for (std::size_t r = 0; r < rays.size(); ++r)
        if (sign[r] == 0) rays[r].zeros.set(h);
      continue;
    }

    // rays tight on each processed constraint; adjacency candidates are
    // drawn from the shortest list among the common zeros
    std::vector<std::vector<std::uint32_t>> tight_on(m);
    std::vector<std::vector<std::size_t>> zero_list(rays.size());
    for (std::size_t r = 0; r < rays.size(); ++r) {
      zero_list[r] = rays[r].zeros.indices();
      for (auto c : zero_list[r]) tight_on[c].push_back(static_cast<std::uint32_t>(r));
    }

    std::vector<std::vector<Ray>> created(pos.size());
    const long npos = static_cast<long>(pos.size());
    const bool par = exec == Exec::parallel;
    (void)par;
    POLYPROD_OMP(parallel for schedule(dynamic) if(par))
    for (long pi = 0; pi < npos; ++pi) {
      const std::size_t p = pos[static_cast<std::size_t>(pi)];
      std::vector<std::size_t> common;
      for (std::size_t q : neg) {
        common.clear();
        for (auto c : zero_list[p])
          if (rays[q].zeros.test(c)) common.push_back(c);
        if (common.size() + 2 < dim) continue;
        const std::vector<std::uint32_t>* shortest = nullptr;
        for (auto c : common)
          if (!shortest || tight_on[c].size() < shortest->size()) shortest = &tight_on[c];
        bool adjacent = true;
        for (std::size_t k = 0; shortest && k < shortest->size() && adjacent; ++k) {
          const std::size_t t = (*shortest)[k];
          if (t == p || t == q) continue;
          const IndexSet& zt = rays[t].zeros;
          adjacent = !std::all_of(common.begin(), common.end(), [&zt](std::size_t c) { return zt.test(c); });
        }
        if (!adjacent) continue;
        Ray ray{ZVector(dim), rays[p].zeros & rays[q].zeros};
        const Integer neg_q = -value[q];
        for (std::size_t j = 0; j < dim; ++j)
          ray.coords[j] = value[p] * rays[q].coords[j] + neg_q * rays[p].coords[j];
        make_primitive(ray.coords);
        ray.zeros.set(h);
        created[static_cast<std::size_t>(pi)].push_back(std::move(ray));
      }
    }

    std::vector<Ray> next;
    next.reserve(rays.size());
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (sign[r] < 0) continue;
      if (sign[r] == 0) rays[r].zeros.set(h);
      next.push_back(std::move(rays[r]));
    }
    for (auto& batch : created)
      for (auto& ray : batch) next.push_back(std::move(ray));
    rays = std::move(next);
  }
  return rays;
}

}  // namespace

VPolytope h_to_v(const HPolytope& p, Exec exec) {
  const std::size_t d = p.dim();
  const std::size_t m = p.num_rows();
  if (p.b.size() != m) throw std::invalid_argument("h_to_v: rhs length differs from row count");
  if (rank(p.a) < d) throw PolytopeError(PolytopeError::Kind::unbounded, "unbounded");

  // Row 0 is t >= 0; row i+1 is b_i t - A_i x >= 0.
  std::vector<ZVector> g;
  g.reserve(m + 1);
  {
    ZVector t(d + 1);
    t[0] = 1;
    g.push_back(std::move(t));
  }
  QVector row(d + 1);
  for (std::size_t i = 0; i < m; ++i) {
    row[0] = p.b[i];
    for (std::size_t j = 0; j < d; ++j) row[j + 1] = -p.a(i, j);
    g.push_back(primitive_integer(row));
  }

  const auto rays = double_description(g, d + 1, exec);

  std::vector<std::pair<QVector, const ZVector*>> found;
  bool recession = false;
  for (const auto& ray : rays) {
    if (ray.coords[0] == 0) {
      recession = true;
      continue;
    }
    QVector x(d);
    for (std::size_t j = 0; j < d; ++j) {
      x[j] = Rational(ray.coords[j + 1], ray.coords[0]);
      x[j].canonicalize();
    }
    found.emplace_back(std::move(x), &ray.coords);
  }
  if (found.empty()) throw PolytopeError(PolytopeError::Kind::empty, "empty");
  if (recession) throw PolytopeError(PolytopeError::Kind::unbounded, "unbounded");

  std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  found.erase(std::unique(found.begin(), found.end(), [](const auto& x, const auto& y) { return x.first == y.first; }),
              found.end());
  std::vector<QVector> vertices;
  for (const auto& f : found) vertices.push_back(f.first);
  if (affine_dimension(vertices) != static_cast<int>(d))
    throw PolytopeError(PolytopeError::Kind::degenerate, "degenerate");

  VPolytope v;
  v.num_rows = m;
  v.incidence.reserve(vertices.size());
  for (const auto& f : found) {
    IndexSet tight(m);
    for (std::size_t i = 0; i < m; ++i) {
      const int s = sgn(eval(g[i + 1], *f.second));
      if (s < 0) throw std::logic_error("h_to_v: produced an infeasible vertex");
      if (s == 0) tight.set(i);
    }
    v.incidence.push_back(std::move(tight));
  }
  v.vertices = std::move(vertices);
  return v;
}

HPolytope v_to_h(std::span<const QVector> points, Exec exec) {
  if (points.empty()) throw PolytopeError(PolytopeError::Kind::degenerate, "degenerate");
  const std::size_t d = points.front().size();
  if (affine_dimension(points) != static_cast<int>(d))
    throw PolytopeError(PolytopeError::Kind::degenerate, "degenerate");

  QVector center(d);
  for (const auto& x : points)
    for (std::size_t j = 0; j < d; ++j) center[j] += x[j];
  for (auto& c : center) c /= static_cast<long>(points.size());

  HPolytope polar;
  polar.a = QMatrix(points.size(), d);
  polar.b.assign(points.size(), Rational(1));
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = 0; j < d; ++j) polar.a(i, j) = points[i][j] - center[j];

  const VPolytope dual = h_to_v(polar, exec);

  HPolytope out;
  out.a = QMatrix(dual.size(), d);
  out.b.resize(dual.size());
  for (std::size_t f = 0; f < dual.size(); ++f) {
    const QVector& y = dual.vertices[f];
    const ZVector normal = primitive_integer(y);
    // y.(x - c) <= 1, rescaled by the positive factor normal/y
    Rational scale;
    for (std::size_t j = 0; j < d; ++j)
      if (y[j] != 0) {
        scale = Rational(normal[j]) / y[j];
        break;
      }
    for (std::size_t j = 0; j < d; ++j) out.a(f, j) = normal[j];
    out.b[f] = scale * (1 + dot(y, center));
  }
  return out;
}

IndexSet tight_rows(const HPolytope& h, std::span<const Rational> x) {
  IndexSet tight(h.num_rows());
  for (std::size_t i = 0; i < h.num_rows(); ++i)
    if (dot(h.a.row(i), x) == h.b[i]) tight.set(i);
  return tight;
}

HomogeneousRows::HomogeneousRows(const HPolytope& h) {
  const std::size_t d = h.dim();
  QVector row(d + 1);
  rows_.reserve(h.num_rows());
  for (std::size_t i = 0; i < h.num_rows(); ++i) {
    row[0] = h.b[i];
    for (std::size_t j = 0; j < d; ++j) row[j + 1] = -h.a(i, j);
    rows_.push_back(primitive_integer(row));
  }
}

ZVector HomogeneousRows::homogenize(std::span<const Rational> x) {
  Integer l = 1;
  for (const auto& q : x) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  ZVector y(x.size() + 1);
  y[0] = l;
  for (std::size_t j = 0; j < x.size(); ++j) y[j + 1] = l / x[j].get_den() * x[j].get_num();
  return y;
}

IndexSet HomogeneousRows::tight(std::span<const Rational> x) const {
  const ZVector y = homogenize(x);
  IndexSet out(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const int s = sgn(eval(rows_[i], y));
    if (s < 0) throw std::logic_error("point violates row " + std::to_string(i));
    if (s == 0) out.set(i);
  }
  return out;
}

VPolytope vertex_polytope(const HPolytope& h, std::span<const QVector> points) {
  const std::size_t d = h.dim();
  const HomogeneousRows rows(h);
  std::vector<std::pair<QVector, IndexSet>> found;
  for (const auto& x : points) {
    IndexSet tight = rows.tight(x);
    EchelonBasis eb(d);
    for (auto i : tight.indices()) {
      eb.add(h.a.row(i));
      if (eb.rank() == d) break;
    }
    if (eb.rank() == d) found.emplace_back(x, std::move(tight));
  }
  std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  found.erase(std::unique(found.begin(), found.end(), [](const auto& x, const auto& y) { return x.first == y.first; }),
              found.end());
  VPolytope v;
  v.num_rows = h.num_rows();
  for (auto& f : found) {
    v.vertices.push_back(std::move(f.first));
    v.incidence.push_back(std::move(f.second));
  }
  return v;
}

IndexSet vertices_on_row(const VPolytope& v, std::size_t row) {
  IndexSet s(v.size());
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v.incidence[k].test(row)) s.set(k);
  return s;
}

std::vector<std::size_t> facet_rows(const VPolytope& v) {
  std::vector<std::size_t> rows;
  const int d = static_cast<int>(v.dim());
  for (std::size_t i = 0; i < v.num_rows; ++i) {
    const IndexSet on = vertices_on_row(v, i);
    if (on.count() < static_cast<std::size_t>(d)) continue;
    std::vector<QVector> pts;
    for (auto k : on.indices()) pts.push_back(v.vertices[k]);
    if (affine_dimension(pts) == d - 1) rows.push_back(i);
  }
  return rows;
}

}  // namespace polyprod
