#include "polyprod/metrics.hpp"

#include <stdexcept>

namespace polyprod {

namespace {

Integer ipow(long base, unsigned long exp) {
  Integer z;
  mpz_ui_pow_ui(z.get_mpz_t(), static_cast<unsigned long>(base), exp);
  return z;
}

Rational ratio(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

void require_not_apex(const FlagVector4& f) {
  if (f.f0 + f.f3 == 10) throw std::domain_error("apex of cone");
}

void require_params(int n, int r) {
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("n must be even and at least 4");
  if (r < 2) throw std::invalid_argument("r must be at least 2");
}

}  // namespace

FlagVector4 flag_vector(const FaceLattice& lattice) {
  if (lattice.dim() != 4) throw std::invalid_argument("flag vector needs a 4-dimensional lattice");
  const auto f = lattice.f_vector();
  FlagVector4 out;
  out.f0 = static_cast<unsigned long>(f[0]);
  out.f1 = static_cast<unsigned long>(f[1]);
  out.f2 = static_cast<unsigned long>(f[2]);
  out.f3 = static_cast<unsigned long>(f[3]);
  out.f03 = static_cast<unsigned long>(flag_f03(lattice));
  return out;
}

Phi phi(const FlagVector4& f) {
  const Integer den = f.f1 + f.f2 - 20;
  if (den == 0) throw std::domain_error("apex of cone");
  return {ratio(f.f0 - 5, den), ratio(f.f3 - 5, den)};
}

GVector g_vector(const FlagVector4& f) {
  return {f.f0 - 5, f.f3 - 5, f.f03 - 3 * f.f0 - 3 * f.f3 + 10};
}

Rational fatness(const FlagVector4& f) {
  require_not_apex(f);
  return ratio(f.f1 + f.f2 - 20, f.f0 + f.f3 - 10);
}

Complexity complexity(const FlagVector4& f) {
  require_not_apex(f);
  const GVector g = g_vector(f);
  Complexity c{ratio(f.f03 - 20, f.f0 + f.f3 - 10), ratio(g.g2, g.g1 + g.g1_dual) + 3};
  if (c.value != c.g_form) throw std::logic_error("complexity forms disagree");
  return c;
}

ConeMembership cone_membership(const FlagVector4& f) {
  require_not_apex(f);
  const Phi p = phi(f);
  ConeMembership c;
  c.phi0_nonneg = p.phi0 >= 0;
  c.phi3_nonneg = p.phi3 >= 0;
  c.simplicial_bound = p.phi0 + 3 * p.phi3 <= 1;
  c.simple_bound = 3 * p.phi0 + p.phi3 <= 1;
  c.g2_bound = p.phi0 + p.phi3 <= Rational(2, 5);
  return c;
}

FlagVector4 predicted_flag(int n, int r) {
  require_params(n, r);
  const Integer nr = ipow(n, static_cast<unsigned long>(r));
  const Integer nr1 = ipow(n, static_cast<unsigned long>(r - 1));
  // n^r is divisible by 4 for even n and r >= 2, so every term is integral
  FlagVector4 f;
  f.f0 = nr;
  f.f1 = r * nr;
  f.f2 = 5 * r * nr / 4 - 3 * nr / 2 + r * nr1;
  f.f3 = r * nr / 4 - nr / 2 + r * nr1;
  f.f03 = 4 * r * nr - 4 * nr;
  if (!f.satisfies_euler()) throw std::logic_error("predicted flag vector violates Euler");
  return f;
}

PrintedForms printed_forms(int n, int r, const FlagVector4& actual) {
  require_params(n, r);
  const Integer nr = ipow(n, static_cast<unsigned long>(r));
  const Integer nr1 = ipow(n, static_cast<unsigned long>(r - 1));
  PrintedForms p;
  p.f2 = ratio(5 * r * nr, 4) - ratio(3 * nr, 4) + Rational(r * nr1);
  const Rational f0(nr), f1(r * nr);
  const Rational f3 = predicted_flag(n, r).f3;
  p.euler_holds = f0 - f1 + p.f2 - f3 == 0;
  p.fatness = ratio(actual.f1 + actual.f3 - 20, actual.f0 + actual.f2 - 10);
  p.phi3 = ratio(actual.f3 - 5, actual.f1 + actual.f3 - 20);
  p.complexity = ratio(actual.f03, actual.f0 + actual.f3 - 10);
  return p;
}

LimitValues limit_claims(int n, int r) {
  const FlagVector4 f = predicted_flag(n, r);
  return {fatness(f), complexity(f).value};
}

Rational fatness_limit_in_n(int r) { return ratio(Integer(9 * r - 6), Integer(r + 2)); }

bool steinitz_check_3d(long f0, long f1, long f2) {
  return f2 <= 2 * f0 - 4 && f0 <= 2 * f2 - 4 && f1 == f0 + f2 - 2;
}

CountingReport counting_identities(const FaceLattice& lattice, std::span<const IndexSet> polygons, int n, int r) {
  require_params(n, r);
  if (lattice.dim() != 4) throw std::invalid_argument("counting identities need a 4-polytope");
  std::vector<std::size_t> polygon_ids;
  for (const auto& p : polygons) {
    auto id = lattice.find(p);
    if (!id || lattice.faces()[*id].dim != 2) throw std::runtime_error("polygon image is not a 2-face");
    polygon_ids.push_back(*id);
  }
  std::vector<bool> is_polygon(lattice.faces().size(), false);
  for (auto id : polygon_ids) is_polygon[id] = true;
  std::vector<std::size_t> prisms_per_polygon(lattice.faces().size(), 0);

  CountingReport rep;
  for (auto facet : lattice.facets()) {
    const auto two_faces = lattice.subfaces_of_dim(facet, 2);
    std::size_t polys = 0;
    for (auto f : two_faces) polys += is_polygon[f] ? 1 : 0;
    const std::size_t nv = lattice.faces()[facet].vertices.count();
    if (polys == 2 && nv == static_cast<std::size_t>(2 * n) && two_faces.size() == static_cast<std::size_t>(n + 2)) {
      ++rep.prisms;
      for (auto f : two_faces)
        if (is_polygon[f]) ++prisms_per_polygon[f];
      continue;
    }
    bool cube = polys == 0 && nv == 8 && two_faces.size() == 6;
    for (auto f : two_faces) cube = cube && lattice.faces()[f].vertices.count() == 4;
    if (!cube)
      throw std::runtime_error("facet with " + std::to_string(nv) + " vertices and " + std::to_string(polys) +
                               " polygons is neither prism nor cube");
    ++rep.cubes;
  }

  const FlagVector4 f = flag_vector(lattice);
  rep.f2 = f.f2;
  rep.f03 = f.f03;
  const Integer nr = ipow(n, static_cast<unsigned long>(r));
  const Integer prisms(static_cast<unsigned long>(rep.prisms));
  const Integer cubes(static_cast<unsigned long>(rep.cubes));
  rep.prism_count_ok = prisms == r * ipow(n, static_cast<unsigned long>(r - 1));
  rep.cube_count_ok = 4 * cubes == (r - 2) * nr;
  rep.ridge_identity_ok = 6 * cubes + (n + 2) * prisms == 2 * f.f2;
  rep.incidence_identity_ok = f.f03 == 8 * cubes + 2 * n * prisms;
  rep.polygons_in_two_prisms = true;
  for (auto id : polygon_ids) rep.polygons_in_two_prisms = rep.polygons_in_two_prisms && prisms_per_polygon[id] == 2;
  return rep;
}

}  // namespace polyprod
