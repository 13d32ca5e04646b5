#include "polyprod/projection.hpp"

#include "polyprod/construction.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyprod {

AlphaBeta alpha_beta(std::int64_t k) {
  const Rational up = pow2(k);
  const Rational down = pow2(-k);
  return {k, up + down - 2, up + Rational(5, 4) * down - Rational(9, 4)};
}

bool zero_sum_check(std::int64_t k) {
  const auto prev = alpha_beta(k - 1);
  const auto cur = alpha_beta(k);
  const auto next = alpha_beta(k + 1);
  const Vec2 v0 = BlockSpec::v0(), u0 = BlockSpec::u0(), u1 = BlockSpec::u1();
  const Vec2 w0 = BlockSpec::w0(), w1 = BlockSpec::w1();
  for (std::size_t c = 0; c < 2; ++c) {
    const Rational s = prev.alpha * v0[c] + cur.alpha * u0[c] + cur.beta * u1[c] + next.alpha * w0[c] +
                       next.beta * w1[c];
    if (s != 0) return false;
  }
  return true;
}

Rational coefficient_matrix_determinant(std::int64_t k) {
  QMatrix m(3, 3);
  const std::int64_t first[3] = {-1, 0, 1};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto shift = static_cast<std::int64_t>(i);
    m(i, 0) = -alpha_beta(first[i]).alpha;
    const auto ab = alpha_beta(k + shift);
    m(i, 1) = -ab.alpha;
    m(i, 2) = -ab.beta;
  }
  return determinant(m);
}

Rational coefficient_matrix_closed_form(std::int64_t k) {
  return Rational(3, 8) * (pow2(k) - 1 + pow2(-k - 2));
}

QMatrix reduced_matrix(int n, int r) {
  (void)n;  // the two-row pattern of each block does not depend on n
  if (r < 2) throw std::invalid_argument("reduced matrix needs r >= 2");
  const auto rr = static_cast<std::size_t>(r);
  const std::size_t cols = 2 * rr - 4;
  QMatrix m(2 * rr, cols);
  auto place = [&](std::size_t row, std::size_t block_col, const Vec2& v) {
    // block_col is 1-based; only the first r-2 block columns are kept
    if (block_col < 1 || block_col > rr - 2) return;
    m(row, 2 * (block_col - 1)) = v[0];
    m(row, 2 * (block_col - 1) + 1) = v[1];
  };
  for (std::size_t k = 1; k <= rr; ++k) {
    const std::size_t even = 2 * (k - 1), odd = even + 1;
    place(even, k, BlockSpec::v0());
    place(odd, k, BlockSpec::v1());
    if (k >= 2) {
      place(even, k - 1, BlockSpec::u0());
      place(odd, k - 1, BlockSpec::u1());
    }
    if (k >= 3) {
      place(even, k - 2, BlockSpec::w0());
      place(odd, k - 2, BlockSpec::w1());
    }
  }
  return m;
}

std::vector<DeletionCertificate> deletion_certificates(int n, int r) {
  if (r < 2) throw std::invalid_argument("deletion certificates need r >= 2");
  if (r == 2) return {};
  const QMatrix a = reduced_matrix(n, r);
  const std::size_t cols = a.cols();
  std::vector<DeletionCertificate> out;
  for (int t = 1; t <= r; ++t) {
    DeletionCertificate cert;
    cert.t = t;
    std::vector<std::size_t> kept;
    std::vector<QVector> rows;
    QVector positive;
    cert.coefficients.resize(a.rows());
    for (int k = 1; k <= r; ++k) {
      const auto ab = alpha_beta(k - t);
      const auto even = static_cast<std::size_t>(2 * (k - 1));
      cert.coefficients[even] = ab.alpha;
      cert.coefficients[even + 1] = ab.beta;
      if (k == t) continue;
      for (std::size_t row : {even, even + 1}) {
        kept.push_back(row);
        rows.push_back(a.row_vector(row));
        positive.push_back(cert.coefficients[row]);
      }
    }
    const std::string where = "block t=" + std::to_string(t) + ": ";
    cert.rank = rank(a.select_rows(kept));
    if (cert.rank != cols)
      throw std::runtime_error(where + "remaining rows have rank " + std::to_string(cert.rank) + ", need " +
                               std::to_string(cols));
    // coefficient vector must vanish exactly on block t and sum all rows to zero
    const auto zero_row = static_cast<std::size_t>(2 * (t - 1));
    if (cert.coefficients[zero_row] != 0 || cert.coefficients[zero_row + 1] != 0)
      throw std::runtime_error(where + "deleted block has nonzero coefficients");
    for (std::size_t j = 0; j < cols; ++j) {
      Rational s = 0;
      for (std::size_t i = 0; i < a.rows(); ++i) s += cert.coefficients[i] * a(i, j);
      if (s != 0) throw std::runtime_error(where + "weighted row sum is not zero");
    }
    if (!verify_dependence(rows, positive))
      throw std::runtime_error(where + "remaining coefficients are not strictly positive");
    cert.remaining = {CertificateKind::spanning, std::move(positive)};
    out.push_back(std::move(cert));
  }
  return out;
}

Projection project(const VPolytope& v, std::size_t keep) {
  const std::size_t d = v.dim();
  if (keep > d) throw std::invalid_argument("projection keeps more coordinates than the ambient dimension");
  Projection p;
  p.keep = keep;
  p.images.reserve(v.size());
  for (const auto& x : v.vertices) p.images.emplace_back(x.end() - static_cast<std::ptrdiff_t>(keep), x.end());
  p.distinct = p.images;
  std::sort(p.distinct.begin(), p.distinct.end());
  p.distinct.erase(std::unique(p.distinct.begin(), p.distinct.end()), p.distinct.end());
  p.image_id.reserve(v.size());
  for (const auto& y : p.images)
    p.image_id.push_back(static_cast<std::size_t>(
        std::lower_bound(p.distinct.begin(), p.distinct.end(), y) - p.distinct.begin()));
  return p;
}

ProjectionSetup prepare_projection(HPolytope source, std::size_t keep, Exec exec) {
  ProjectionSetup s;
  s.source_h = std::move(source);
  s.source_v = h_to_v(s.source_h, exec);
  s.source_facet_rows = facet_rows(s.source_v);
  s.source_lattice = face_lattice(s.source_v, exec);
  s.projection = project(s.source_v, keep);
  s.image_h = v_to_h(s.projection.distinct, exec);
  s.image_v = vertex_polytope(s.image_h, s.projection.distinct);
  s.image_lattice = face_lattice(s.image_v, exec);

  std::vector<std::optional<std::size_t>> vertex_of_distinct(s.projection.distinct.size());
  std::vector<IndexSet> tight_of_distinct(s.projection.distinct.size());
  const HomogeneousRows image_rows(s.image_h);
  for (std::size_t i = 0; i < s.projection.distinct.size(); ++i) {
    const auto& y = s.projection.distinct[i];
    auto it = std::lower_bound(s.image_v.vertices.begin(), s.image_v.vertices.end(), y);
    if (it != s.image_v.vertices.end() && *it == y)
      vertex_of_distinct[i] = static_cast<std::size_t>(it - s.image_v.vertices.begin());
    tight_of_distinct[i] = image_rows.tight(y);
  }
  for (auto id : s.projection.image_id) {
    s.image_vertex.push_back(vertex_of_distinct[id]);
    s.image_tight.push_back(tight_of_distinct[id]);
  }
  return s;
}

PreservationReport check_strict_preservation(const ProjectionSetup& s, const IndexSet& face) {
  const auto found = s.source_lattice.find(face);
  if (!found) throw std::invalid_argument("face is not a face of the source polytope");
  PreservationReport rep;
  rep.face_id = *found;
  const int dim = s.source_lattice.faces()[*found].dim;
  const auto members = face.indices();

  // (i) the image vertex set is the vertex set of a face of Q
  IndexSet image(s.image_v.size());
  bool all_vertices = true;
  for (auto k : members) {
    if (s.image_vertex[k]) image.set(*s.image_vertex[k]);
    else all_vertices = false;
  }
  std::optional<std::size_t> image_face;
  if (all_vertices) image_face = s.image_lattice.find(image);
  rep.image_is_face = image_face.has_value();

  // (ii) injective on vertices and dimension preserved
  std::vector<std::size_t> ids;
  std::vector<QVector> pts;
  for (auto k : members) {
    ids.push_back(s.projection.image_id[k]);
    pts.push_back(s.projection.images[k]);
  }
  std::sort(ids.begin(), ids.end());
  const bool distinct = std::adjacent_find(ids.begin(), ids.end()) == ids.end();
  rep.bijective = distinct && affine_dimension(pts) == dim;

  // (iii) every vertex of P mapping into the image face belongs to the face
  if (image_face) {
    IndexSet rows(s.image_h.num_rows());
    for (std::size_t i = 0; i < s.image_h.num_rows(); ++i) rows.set(i);
    for (auto q : s.image_lattice.faces()[*image_face].vertices.indices()) rows &= s.image_v.incidence[q];
    IndexSet preimage(s.source_v.size());
    for (std::size_t k = 0; k < s.source_v.size(); ++k)
      if (rows.is_subset_of(s.image_tight[k])) preimage.set(k);
    rep.preimage_exact = preimage == face;
  }
  rep.direct_ok = rep.image_is_face && rep.bijective && rep.preimage_exact;

  // normal-cone certificate
  const std::size_t e = s.dropped();
  std::vector<QVector> normals;
  for (auto row : s.source_facet_rows) {
    bool contains = true;
    for (auto k : members)
      if (!s.source_v.incidence[k].test(row)) {
        contains = false;
        break;
      }
    if (!contains) continue;
    auto full = s.source_h.a.row(row);
    normals.emplace_back(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(e));
  }
  rep.certificate_ok = static_cast<bool>(positively_spans(normals, e));

  if (!rep.image_is_face) rep.details += "image is not a face; ";
  if (!rep.bijective) rep.details += distinct ? "image dimension drops; " : "vertices collide; ";
  if (rep.image_is_face && !rep.preimage_exact) rep.details += "preimage larger than face; ";
  if (!rep.certificate_ok) rep.details += "normals do not positively span; ";
  if (!rep.details.empty()) rep.details.resize(rep.details.size() - 2);
  return rep;
}

std::vector<PreservationReport> check_faces(const ProjectionSetup& s, std::span<const IndexSet> faces,
                                            Exec exec) {
  std::vector<PreservationReport> out(faces.size());
  const long count = static_cast<long>(faces.size());
  const bool par = exec == Exec::parallel;
  (void)par;
  POLYPROD_OMP(parallel for schedule(dynamic, 4) if(par))
  for (long i = 0; i < count; ++i) {
    const auto k = static_cast<std::size_t>(i);
    out[k] = check_strict_preservation(s, faces[k]);
  }
  return out;
}

std::vector<PolygonFace> enumerate_polygon_faces(const ProductLabeling& labeling) {
  const int n = labeling.n, r = labeling.r;
  const std::size_t nv = labeling.tuples.size();
  std::size_t others = 1;
  for (int k = 1; k < r; ++k) others *= static_cast<std::size_t>(n);

  std::vector<PolygonFace> out;
  out.reserve(static_cast<std::size_t>(r) * others);
  std::vector<int> tuple(static_cast<std::size_t>(r));
  for (int factor = 1; factor <= r; ++factor) {
    for (std::size_t rest = 0; rest < others; ++rest) {
      // decode the other r-1 coordinates, in block order
      std::size_t c = rest;
      for (int k = r; k >= 1; --k) {
        if (k == factor) continue;
        tuple[static_cast<std::size_t>(k - 1)] = static_cast<int>(c % static_cast<std::size_t>(n));
        c /= static_cast<std::size_t>(n);
      }
      PolygonFace face{factor, IndexSet(nv)};
      for (int i = 0; i < n; ++i) {
        tuple[static_cast<std::size_t>(factor - 1)] = i;
        face.vertices.set(labeling.vertex_of_code[labeling.code(tuple)]);
      }
      out.push_back(std::move(face));
    }
  }
  return out;
}

}  // namespace polyprod
