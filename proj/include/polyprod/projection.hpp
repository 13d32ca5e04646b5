#ifndef POLYPROD_PROJECTION_HPP
#define POLYPROD_PROJECTION_HPP

#include "polyprod/exec.hpp"
#include "polyprod/lattice.hpp"
#include "polyprod/polytope.hpp"
#include "polyprod/positive.hpp"
#include "polyprod/product.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace polyprod {

// alpha_k = 2^k + 2^-k - 2,  beta_k = 2^k + (5/4) 2^-k - 9/4
struct AlphaBeta {
  std::int64_t k = 0;
  Rational alpha;
  Rational beta;
};

AlphaBeta alpha_beta(std::int64_t k);

// alpha_{k-1} v0 + alpha_k u0 + beta_k u1 + alpha_{k+1} w0 + beta_{k+1} w1 == 0
bool zero_sum_check(std::int64_t k);

// det [[-a_{-1}, -a_k, -b_k], [-a_0, -a_{k+1}, -b_{k+1}], [-a_1, -a_{k+2}, -b_{k+2}]]
Rational coefficient_matrix_determinant(std::int64_t k);
// (3/8)(2^k - 1 + 2^{-k-2})
Rational coefficient_matrix_closed_form(std::int64_t k);

// 2r x (2r-4): rows (even, odd) of each block restricted to the
// coordinates dropped by the projection. Throws for r < 2.
QMatrix reduced_matrix(int n, int r);

// One entry per deleted block t = 1..r.
struct DeletionCertificate {
  int t = 0;
  std::size_t rank = 0;           // rank of the 2r-2 remaining rows
  QVector coefficients;           // length 2r, zeros on block t
  PositiveCertificate remaining;  // the 2r-2 strictly positive coefficients
};

// Throws std::runtime_error naming t and the failed sub-condition.
// Empty for r == 2.
std::vector<DeletionCertificate> deletion_certificates(int n, int r);

// Images under the projection to the last `keep` coordinates.
struct Projection {
  std::size_t keep = 0;
  std::vector<QVector> images;         // one per source vertex
  std::vector<std::size_t> image_id;   // source vertex -> index into distinct
  std::vector<QVector> distinct;
};

// Throws std::invalid_argument if keep > dim.
Projection project(const VPolytope& v, std::size_t keep = 4);

// Everything needed to test faces of P against Q = pi(P).
struct ProjectionSetup {
  HPolytope source_h;
  VPolytope source_v;
  std::vector<std::size_t> source_facet_rows;
  FaceLattice source_lattice;
  Projection projection;
  HPolytope image_h;
  VPolytope image_v;
  FaceLattice image_lattice;
  std::vector<std::optional<std::size_t>> image_vertex;  // P vertex -> Q vertex
  std::vector<IndexSet> image_tight;                     // P vertex -> tight rows of image_h

  std::size_t dropped() const { return source_h.dim() - projection.keep; }
};

ProjectionSetup prepare_projection(HPolytope source, std::size_t keep = 4, Exec exec = Exec::parallel);

struct PreservationReport {
  std::size_t face_id = 0;  // index in the source lattice
  int factor = 0;           // polygon factor k, 0 when not a polygon face
  bool image_is_face = false;
  bool bijective = false;
  bool preimage_exact = false;
  bool direct_ok = false;
  bool certificate_ok = false;
  std::string details;
};

// Direct check of the strict-preservation definition plus the normal-cone
// certificate (first dropped coordinates of the containing facet normals
// positively span). Throws std::invalid_argument for a non-face.
PreservationReport check_strict_preservation(const ProjectionSetup& s, const IndexSet& face);

// Batch version over many faces; OpenMP-parallel over the face list.
std::vector<PreservationReport> check_faces(const ProjectionSetup& s, std::span<const IndexSet> faces,
                                            Exec exec = Exec::parallel);

struct PolygonFace {
  int factor = 0;  // 1-based
  IndexSet vertices;
};

// The r n^{r-1} polygon 2-faces in the canonical product labeling.
std::vector<PolygonFace> enumerate_polygon_faces(const ProductLabeling& labeling);

}  // namespace polyprod

#endif  // POLYPROD_PROJECTION_HPP
