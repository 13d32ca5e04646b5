#include "fixtures.hpp"

#include "polyprod/construction.hpp"
#include "polyprod/metrics.hpp"
#include "polyprod/pipeline.hpp"

#include <doctest.h>

using namespace polyprod;

namespace {

Rational q(long num, long den) {
  Rational out(num, den);
  out.canonicalize();
  return out;
}

FlagVector4 flag(long f0, long f1, long f2, long f3, long f03) { return {f0, f1, f2, f3, f03}; }

const FlagVector4 kCube = flag(16, 32, 24, 8, 64);
const FlagVector4 kCell = flag(24, 96, 96, 24, 144);
const FlagVector4 kSimplex = flag(5, 10, 10, 5, 20);

}  // namespace

TEST_SUITE("fixtures") {
  TEST_CASE("flag vectors from coordinates") {
    CHECK(flag_vector(fixture::lattice_of(fixture::cube(4))) == kCube);
    CHECK(flag_vector(fixture::lattice_of(fixture::cell24())) == kCell);
    CHECK(flag_vector(fixture::lattice_of(fixture::simplex4())) == kSimplex);
    CHECK_THROWS_AS(flag_vector(fixture::lattice_of(fixture::cube(3))), std::invalid_argument);
  }

  TEST_CASE("fatness") {
    CHECK(fatness(kCube) == q(18, 7));
    CHECK(fatness(kCube) < 3);
    CHECK(fatness(kCell) == q(172, 38));
    CHECK(to_decimal(fatness(kCell), 3) == "4.526");
    CHECK_THROWS_WITH_AS(fatness(kSimplex), "apex of cone", std::domain_error);
  }

  TEST_CASE("complexity: both forms agree") {
    for (const auto& f : {kCube, kCell}) {
      const Complexity c = complexity(f);
      CHECK(c.value == c.g_form);
      CHECK(c.value >= 3);
    }
    CHECK(complexity(kCube).value == q(44, 14));
    CHECK(complexity(kCell).value == q(124, 38));
    CHECK_THROWS_AS(complexity(kSimplex), std::domain_error);
  }

  TEST_CASE("factor-two bounds are tight on the fixtures") {
    for (const auto& f : {kCube, kCell}) {
      const Rational F = fatness(f), C = complexity(f).value;
      CHECK(C <= 2 * F - 2);
      CHECK(F <= 2 * C - 2);
    }
    CHECK(complexity(kCube).value == 2 * fatness(kCube) - 2);
    CHECK(fatness(kCell) == 2 * complexity(kCell).value - 2);
  }

  TEST_CASE("g vector") {
    const GVector g = g_vector(kCell);
    CHECK(g.g1 == 19);
    CHECK(g.g1_dual == 19);
    CHECK(g.g2 == 10);
    CHECK(g_vector(kCube).g2 == 2);
    CHECK(g_vector(kSimplex).g2 == 0);
  }

  TEST_CASE("cone membership") {
    const Phi p = phi(kCube);
    CHECK(p.phi0 == q(11, 36));
    CHECK(p.phi3 == q(3, 36));
    CHECK(3 * p.phi0 + p.phi3 == 1);
    CHECK(cone_membership(kCube).all());
    const Phi c = phi(kCell);
    CHECK(c.phi0 + c.phi3 == q(38, 172));
    CHECK(cone_membership(kCell).all());
    CHECK(1 / (c.phi0 + c.phi3) == fatness(kCell));
    CHECK_THROWS_AS(cone_membership(kSimplex), std::domain_error);
  }

  TEST_CASE("Steinitz conditions") {
    CHECK(steinitz_check_3d(8, 12, 6));
    CHECK_FALSE(steinitz_check_3d(8, 12, 14));
    CHECK(steinitz_check_3d(4, 6, 4));
  }
}

TEST_SUITE("predicted flag") {
  TEST_CASE("grid values") {
    CHECK(predicted_flag(4, 2) == kCube);
    CHECK(predicted_flag(4, 3) == flag(64, 192, 192, 64, 512));
    CHECK(predicted_flag(6, 3) == flag(216, 648, 594, 162, 1728));
    CHECK(predicted_flag(6, 2) == flag(36, 72, 48, 12, 144));
  }

  TEST_CASE("Euler holds everywhere") {
    for (int n = 4; n <= 40; n += 2)
      for (int r = 2; r <= 12; ++r) CHECK(predicted_flag(n, r).satisfies_euler());
  }

  TEST_CASE("invalid parameters") {
    CHECK_THROWS_AS(predicted_flag(5, 3), std::invalid_argument);
    CHECK_THROWS_AS(predicted_flag(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(predicted_flag(2, 3), std::invalid_argument);
  }

  TEST_CASE("printed f2 term overcounts") {
    const PrintedForms p = printed_forms(4, 2, kCube);
    CHECK(p.f2 == 36);
    CHECK_FALSE(p.euler_holds);
    CHECK(p.f2 - Rational(kCube.f2) == 12);
    // printed transposed fatness differs from the Euler-consistent one
    CHECK(p.fatness == q(32 + 8 - 20, 16 + 24 - 10));
    CHECK(p.fatness != fatness(kCube));
    CHECK(p.complexity == q(64, 14));
  }
}

TEST_SUITE("limits") {
  TEST_CASE("(10^6, 10^3)") {
    const LimitValues v = limit_claims(1000000, 1000);
    CHECK(v.fatness > q(89, 10));
    CHECK(v.complexity > q(159, 10));
    CHECK(v.fatness < 9);
    CHECK(v.complexity < 16);
  }

  TEST_CASE("identity case") { CHECK(limit_claims(4, 2).fatness == q(18, 7)); }

  TEST_CASE("limit in n at fixed r") {
    for (int r : {10, 100, 1000}) {
      const Rational lim = fatness_limit_in_n(r);
      CHECK(lim == q(9 * r - 6, r + 2));
      Rational prev_gap = lim;
      for (int n : {100, 10000, 1000000}) {
        const Rational gap = abs(lim - limit_claims(n, r).fatness);
        CHECK(gap < prev_gap);
        prev_gap = gap;
      }
      CHECK(prev_gap < q(1, 1000));
    }
  }

  TEST_CASE("monotone in r, below 9 and 16") {
    for (int n : {4, 6, 8, 100}) {
      Rational prev = 0;
      for (int r = 2; r <= 50; ++r) {
        const LimitValues v = limit_claims(n, r);
        CHECK(v.fatness > prev);
        CHECK(v.fatness < 9);
        CHECK(v.complexity < 16);
        prev = v.fatness;
      }
    }
  }
}

TEST_SUITE("analyze") {
  TEST_CASE("(4,3) counting identities and prediction") {
    const Instance inst = load_instance(build_deformed_product(choose_parameters(4, 3)), 4, 3);
    const AnalyzeReport rep = analyze(inst, true);
    CHECK(rep.ok());
    CHECK(rep.actual == predicted_flag(4, 3));
    REQUIRE(rep.counting);
    CHECK(rep.counting->prisms == 48);
    CHECK(rep.counting->cubes == 16);
    CHECK(rep.counting->all());
    CHECK(rep.cone.all());
    CHECK(rep.factor_two_bounds);
    REQUIRE(rep.printed);
    CHECK(rep.printed->f2 == 240);
  }

  TEST_CASE("(4,2) identity projection") {
    const Instance inst = load_instance(build_deformed_product(choose_parameters(4, 2)), 4, 2);
    const AnalyzeReport rep = analyze(inst, true);
    CHECK(rep.ok());
    CHECK(rep.actual == kCube);
    CHECK(rep.fatness_value == q(18, 7));
    CHECK(rep.counting->cubes == 0);
    CHECK(rep.counting->prisms == 8);
    REQUIRE(rep.printed);
    CHECK(rep.printed->f2 == 36);
  }
}
