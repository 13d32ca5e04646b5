#ifndef POLYPROD_METRICS_HPP
#define POLYPROD_METRICS_HPP

#include "polyprod/lattice.hpp"
#include "polyprod/rational.hpp"

#include <string>
#include <vector>

namespace polyprod {

// (f0, f1, f2, f3; f03) of a 4-polytope; arbitrary precision so the
// closed forms can be evaluated far beyond anything enumerable.
struct FlagVector4 {
  Integer f0, f1, f2, f3, f03;

  bool satisfies_euler() const { return f0 - f1 + f2 - f3 == 0; }
  friend bool operator==(const FlagVector4&, const FlagVector4&) = default;
};

// Throws std::invalid_argument unless the lattice is 4-dimensional.
FlagVector4 flag_vector(const FaceLattice& lattice);

struct Phi {
  Rational phi0;
  Rational phi3;
};

struct GVector {
  Integer g1;
  Integer g1_dual;
  Integer g2;
};

// phi0 = (f0-5)/(f1+f2-20), phi3 = (f3-5)/(f1+f2-20)
Phi phi(const FlagVector4& f);
GVector g_vector(const FlagVector4& f);

// (f1+f2-20)/(f0+f3-10). Throws std::domain_error("apex of cone") when
// f0+f3 == 10.
Rational fatness(const FlagVector4& f);

struct Complexity {
  Rational value;   // (f03-20)/(f0+f3-10)
  Rational g_form;  // g2/(g1+g1_dual) + 3
};

// Throws std::domain_error at the apex, std::logic_error if the two forms
// disagree.
Complexity complexity(const FlagVector4& f);

struct ConeMembership {
  bool phi0_nonneg = false;
  bool phi3_nonneg = false;
  bool simplicial_bound = false;  // phi0 + 3 phi3 <= 1
  bool simple_bound = false;      // 3 phi0 + phi3 <= 1
  bool g2_bound = false;          // phi0 + phi3 <= 2/5
  bool all() const { return phi0_nonneg && phi3_nonneg && simplicial_bound && simple_bound && g2_bound; }
};

ConeMembership cone_membership(const FlagVector4& f);

// Flag vector of the projected deformed product, with the f2 term
// -(3/2) n^r that makes the Euler relation hold.
FlagVector4 predicted_flag(int n, int r);

// The closed forms exactly as printed (f2 with -(3/4) n^r; fatness and
// phi3 with the transposed indices; complexity as f03/(f0+f3-10)).
// Diagnostic only.
struct PrintedForms {
  Rational f2;
  bool euler_holds = false;
  Rational fatness;     // (f1+f3-20)/(f0+f2-10) on the given flag vector
  Rational phi3;        // (f3-5)/(f1+f3-20)
  Rational complexity;  // f03/(f0+f3-10)
};
PrintedForms printed_forms(int n, int r, const FlagVector4& actual);

struct LimitValues {
  Rational fatness;
  Rational complexity;
};

// Fatness and complexity of predicted_flag(n, r); no geometry.
LimitValues limit_claims(int n, int r);

// (9r-6)/(r+2), the n -> infinity limit of the fatness at fixed r.
Rational fatness_limit_in_n(int r);

// f2 <= 2 f0 - 4, f0 <= 2 f2 - 4, f1 = f0 + f2 - 2
bool steinitz_check_3d(long f0, long f1, long f2);

// Classification of the facets of the projected polytope.
struct CountingReport {
  std::size_t prisms = 0;
  std::size_t cubes = 0;
  Integer f2;
  Integer f03;
  bool prism_count_ok = false;      // P = r n^{r-1}
  bool cube_count_ok = false;       // C = (r-2) n^r / 4
  bool ridge_identity_ok = false;   // 6C + (n+2)P = 2 f2
  bool incidence_identity_ok = false;  // f03 = 8C + 2nP
  bool polygons_in_two_prisms = false;
  bool all() const {
    return prism_count_ok && cube_count_ok && ridge_identity_ok && incidence_identity_ok && polygons_in_two_prisms;
  }
};

// `polygons` are the images of the polygon 2-faces as vertex sets of the
// lattice. Throws std::runtime_error on a facet that is neither a prism
// (2n vertices, two polygons) nor a cube (8 vertices, six quadrilaterals).
CountingReport counting_identities(const FaceLattice& lattice, std::span<const IndexSet> polygons, int n, int r);

}  // namespace polyprod

#endif  // POLYPROD_METRICS_HPP
