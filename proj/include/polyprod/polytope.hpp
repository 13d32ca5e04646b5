#ifndef POLYPROD_POLYTOPE_HPP
#define POLYPROD_POLYTOPE_HPP

#include "polyprod/exec.hpp"
#include "polyprod/matrix.hpp"
#include "polyprod/vertex_set.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyprod {

// (block k, row i) tag attached by the product builders; k is 1-based,
// i is 0-based within the block.
struct RowLabel {
  int block = 0;
  int index = 0;
  friend bool operator==(const RowLabel&, const RowLabel&) = default;
};

// { x : A x <= b }
struct HPolytope {
  QMatrix a;
  QVector b;
  std::vector<RowLabel> labels;  // empty, or one per row

  std::size_t dim() const { return a.cols(); }
  std::size_t num_rows() const { return a.rows(); }
  bool labeled() const { return !labels.empty(); }
  friend bool operator==(const HPolytope&, const HPolytope&) = default;
};

// Vertex list with vertex-facet incidences relative to the source system.
struct VPolytope {
  std::vector<QVector> vertices;
  std::vector<IndexSet> incidence;  // tight rows of the source HPolytope
  std::size_t num_rows = 0;

  std::size_t dim() const { return vertices.empty() ? 0 : vertices.front().size(); }
  std::size_t size() const { return vertices.size(); }
};

class PolytopeError : public std::runtime_error {
 public:
  enum class Kind { unbounded, empty, degenerate };
  PolytopeError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Double description on the homogenized cone { (t, x) : t >= 0, b t - A x >= 0 }.
// Inequalities are inserted in index order; the pair-combination step
// runs under OpenMP when exec == Exec::parallel. Vertices come back
// sorted lexicographically.
VPolytope h_to_v(const HPolytope& p, Exec exec = Exec::parallel);

// Irredundant facet description of conv(points), via h_to_v on the polar
// taken about the vertex barycenter. Rows are primitive integer normals.
HPolytope v_to_h(std::span<const QVector> points, Exec exec = Exec::parallel);

// Vertex polytope of conv(points) given its irredundant facet system `h`
// (as returned by v_to_h): a point is kept iff its tight rows have rank d.
// Duplicates collapse; vertices are sorted lexicographically.
VPolytope vertex_polytope(const HPolytope& h, std::span<const QVector> points);

// Rows of `h` tight at x.
IndexSet tight_rows(const HPolytope& h, std::span<const Rational> x);

// The rows of A x <= b as primitive integer vectors (b_i, -a_i), so that
// slacks at a point are evaluated in integer arithmetic.
class HomogeneousRows {
 public:
  explicit HomogeneousRows(const HPolytope& h);
  std::size_t size() const { return rows_.size(); }
  const ZVector& row(std::size_t i) const { return rows_[i]; }
  // Integer vector (L, L x) with L the lcm of the denominators of x.
  static ZVector homogenize(std::span<const Rational> x);
  // Rows tight at x; throws std::logic_error if x violates a row.
  IndexSet tight(std::span<const Rational> x) const;

 private:
  std::vector<ZVector> rows_;
};

// Vertices of the source H-system that are tight on row i.
IndexSet vertices_on_row(const VPolytope& v, std::size_t row);

// Rows whose tight vertex set spans a facet (affine dimension d-1).
std::vector<std::size_t> facet_rows(const VPolytope& v);

}  // namespace polyprod

#endif  // POLYPROD_POLYTOPE_HPP
