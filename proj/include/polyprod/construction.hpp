#ifndef POLYPROD_CONSTRUCTION_HPP
#define POLYPROD_CONSTRUCTION_HPP

#include "polyprod/exec.hpp"
#include "polyprod/polytope.hpp"

#include <array>
#include <string>
#include <vector>

namespace polyprod {

using Vec2 = std::array<Rational, 2>;

// Fixed generator vectors of the deformed product blocks.
struct BlockSpec {
  static Vec2 v0() { return {Rational(1), Rational(0)}; }
  static Vec2 v1() { return {Rational(0), Rational(0)}; }
  static Vec2 u0() { return {Rational(0), Rational(1)}; }
  static Vec2 u1() { return {Rational(-3), Rational(-2, 3)}; }
  static Vec2 w0() { return {Rational(-31, 4), Rational(1, 2)}; }
  static Vec2 w1() { return {Rational(9), Rational(-2, 3)}; }
};

struct AdaptationStep {
  Rational eps;
  Rational big_m;
  std::string outcome;  // "accepted" or the failure reason
};

struct ConstructionParams {
  int n = 4;
  int r = 2;
  Rational eps = Rational(1, 20);
  Rational big_m = 16;
  bool force = false;  // build odd n anyway (exploration only)
  std::vector<AdaptationStep> adaptation_log;
};

// Throws std::invalid_argument on n < 4, odd n without force, r < 2,
// eps <= 0 or M <= 1.
void validate_params(const ConstructionParams& p);

// n x 2 perturbed block V^eps.
QMatrix v_eps_block(int n, const Rational& eps, bool force = false);
// n x 2 alternating blocks.
QMatrix u_block(int n);
QMatrix w_block(int n);
// b_1: 1 on even rows, eps on odd rows.
QVector first_rhs(int n, const Rational& eps);

// A^eps_{n,r} x <= b with V^eps on the block diagonal, U one block below,
// W two blocks below, b_k = M^{k-1} b_1. Rows labeled (k, i).
HPolytope build_deformed_product(const ConstructionParams& p);

// Block-diagonal product of r copies of a valid polygon system.
HPolytope build_plain_product(int n, int r, const QMatrix& polygon, const QVector& rhs);

struct PolygonCheck {
  bool ok = false;
  std::string reason;
};

// Rows nonzero and distinct, rows positively span R^2, rhs positive, and
// the rescaled rows v_i / b_i in strictly convex position in cyclic order.
PolygonCheck check_polygon(const QMatrix& v, const QVector& b);
bool validate_polygon(const QMatrix& v, const QVector& b);

// Regular-ish integer n-gon used for plain products and fixtures.
std::pair<QMatrix, QVector> standard_polygon(int n);

// Starting point of the adaptation: eps = 1/(4(n-2)^2+4), M = n^2.
ConstructionParams initial_parameters(int n, int r, bool force = false);

// Adapts eps (halving) and M (squaring) from eps = 1/(4(n-2)^2+4), M = n^2
// until the polygon check, the vertex enumeration and the product check
// all pass. Throws std::runtime_error("no parameters found") after 12 rounds.
ConstructionParams choose_parameters(int n, int r, Exec exec = Exec::parallel);

// Same loop from an explicit start, adapting only the selected parameters.
// With neither selected, the start is checked once and either accepted or
// rejected with std::runtime_error carrying the failure reason.
ConstructionParams adapt_parameters(ConstructionParams start, bool adapt_eps, bool adapt_m,
                                    Exec exec = Exec::parallel);

// Runs the same acceptance chain once; empty string on success.
std::string try_parameters(const ConstructionParams& p, Exec exec = Exec::parallel);

}  // namespace polyprod

#endif  // POLYPROD_CONSTRUCTION_HPP
