// Classical 4-polytopes given by coordinates.
#ifndef POLYPROD_TEST_FIXTURES_HPP
#define POLYPROD_TEST_FIXTURES_HPP

#include "polyprod/lattice.hpp"
#include "polyprod/polytope.hpp"

#include <vector>

namespace fixture {

using polyprod::QVector;
using polyprod::Rational;

inline std::vector<QVector> cube(std::size_t d) {
  std::vector<QVector> pts;
  for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
    QVector p(d);
    for (std::size_t j = 0; j < d; ++j) p[j] = (mask >> j) & 1U ? 1 : -1;
    pts.push_back(p);
  }
  return pts;
}

inline std::vector<QVector> simplex4() {
  std::vector<QVector> pts{QVector(4, Rational(0))};
  for (std::size_t j = 0; j < 4; ++j) {
    QVector e(4, Rational(0));
    e[j] = 1;
    pts.push_back(e);
  }
  return pts;
}

// all permutations of (+-1, +-1, 0, 0)
inline std::vector<QVector> cell24() {
  std::vector<QVector> pts;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          QVector p(4, Rational(0));
          p[i] = si;
          p[j] = sj;
          pts.push_back(p);
        }
  return pts;
}

inline polyprod::FaceLattice lattice_of(const std::vector<QVector>& pts,
                                        polyprod::Exec exec = polyprod::Exec::parallel) {
  const polyprod::HPolytope h = polyprod::v_to_h(pts, exec);
  return polyprod::face_lattice(polyprod::vertex_polytope(h, pts), exec);
}

}  // namespace fixture

#endif  // POLYPROD_TEST_FIXTURES_HPP
