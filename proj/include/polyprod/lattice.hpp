#ifndef POLYPROD_LATTICE_HPP
#define POLYPROD_LATTICE_HPP

#include "polyprod/exec.hpp"
#include "polyprod/polytope.hpp"
#include "polyprod/vertex_set.hpp"

#include <optional>
#include <unordered_map>
#include <vector>

namespace polyprod {

struct Face {
  IndexSet vertices;
  int dim = -1;
};

// All faces of a polytope as vertex sets, empty face and the polytope
// itself included. Faces are sorted by (dim, vertex set).
class FaceLattice {
 public:
  FaceLattice() = default;
  FaceLattice(std::vector<Face> faces, std::size_t num_vertices, int ambient_dim);

  const std::vector<Face>& faces() const { return faces_; }
  std::size_t num_vertices() const { return num_vertices_; }
  int dim() const { return dim_; }

  // f_0 .. f_{d-1}
  std::vector<std::size_t> f_vector() const;
  std::vector<std::size_t> faces_of_dim(int k) const;
  std::vector<std::size_t> facets() const { return faces_of_dim(dim_ - 1); }

  std::optional<std::size_t> find(const IndexSet& vertices) const;
  // Facets whose vertex set contains the given face.
  std::vector<std::size_t> facets_containing(std::size_t face) const;
  // Faces of dimension k contained in the given face.
  std::vector<std::size_t> subfaces_of_dim(std::size_t face, int k) const;

  bool satisfies_euler() const;

 private:
  std::vector<Face> faces_;
  std::size_t num_vertices_ = 0;
  int dim_ = 0;
  std::unordered_map<IndexSet, std::size_t, IndexSetHash> index_;
};

// Closure of the facet vertex sets under intersection; dimensions from the
// affine rank of each face's vertex coordinates.
FaceLattice face_lattice(const VPolytope& v, Exec exec = Exec::parallel);

// Same, from explicit facet vertex sets (used for hand-built fixtures).
FaceLattice face_lattice(std::span<const QVector> vertices, std::span<const IndexSet> facets,
                         Exec exec = Exec::parallel);

// Vertex-facet incidences; throws std::invalid_argument unless dim == 4.
std::size_t flag_f03(const FaceLattice& lattice);

}  // namespace polyprod

#endif  // POLYPROD_LATTICE_HPP
