#include "polyprod/lattice.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace polyprod {

FaceLattice::FaceLattice(std::vector<Face> faces, std::size_t num_vertices, int ambient_dim)
    : faces_(std::move(faces)), num_vertices_(num_vertices), dim_(ambient_dim) {
  std::sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.vertices < b.vertices;
  });
  for (std::size_t k = 0; k < faces_.size(); ++k) index_.emplace(faces_[k].vertices, k);
}

std::vector<std::size_t> FaceLattice::f_vector() const {
  std::vector<std::size_t> f(static_cast<std::size_t>(std::max(dim_, 0)), 0);
  for (const auto& face : faces_)
    if (face.dim >= 0 && face.dim < dim_) ++f[static_cast<std::size_t>(face.dim)];
  return f;
}

std::vector<std::size_t> FaceLattice::faces_of_dim(int k) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < faces_.size(); ++i)
    if (faces_[i].dim == k) out.push_back(i);
  return out;
}

std::optional<std::size_t> FaceLattice::find(const IndexSet& vertices) const {
  auto it = index_.find(vertices);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> FaceLattice::facets_containing(std::size_t face) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < faces_.size(); ++i)
    if (faces_[i].dim == dim_ - 1 && faces_[face].vertices.is_subset_of(faces_[i].vertices))
      out.push_back(i);
  return out;
}

std::vector<std::size_t> FaceLattice::subfaces_of_dim(std::size_t face, int k) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < faces_.size(); ++i)
    if (faces_[i].dim == k && faces_[i].vertices.is_subset_of(faces_[face].vertices)) out.push_back(i);
  return out;
}

bool FaceLattice::satisfies_euler() const {
  const auto f = f_vector();
  long sum = 0;
  for (std::size_t i = 0; i < f.size(); ++i) sum += (i % 2 == 0 ? 1 : -1) * static_cast<long>(f[i]);
  const long expected = (dim_ % 2 == 0) ? 0 : 2;  // 1 - (-1)^d
  return sum == expected;
}

FaceLattice face_lattice(std::span<const QVector> vertices, std::span<const IndexSet> facets,
                         Exec exec) {
  const std::size_t nv = vertices.size();
  const int d = vertices.empty() ? 0 : static_cast<int>(vertices.front().size());

  IndexSet all(nv);
  for (std::size_t k = 0; k < nv; ++k) all.set(k);

  std::unordered_set<IndexSet, IndexSetHash> seen;
  std::vector<IndexSet> order;
  std::deque<IndexSet> queue;
  auto visit = [&](IndexSet s) {
    if (seen.insert(s).second) {
      order.push_back(s);
      queue.push_back(std::move(s));
    }
  };
  visit(all);
  for (const auto& f : facets) visit(f);
  while (!queue.empty()) {
    IndexSet face = std::move(queue.front());
    queue.pop_front();
    if (face == all) continue;
    for (const auto& f : facets) {
      IndexSet meet = face & f;
      if (meet != face) visit(std::move(meet));
    }
  }
  // the empty set is reached whenever two facets are disjoint; add it for
  // simplices and low dimensions where that never happens
  visit(IndexSet(nv));

  // Facet hyperplane normals. A nonempty face has dimension d minus the
  // rank of the normals of the facets containing it.
  const auto dd = static_cast<std::size_t>(d);
  std::vector<QVector> normals;
  bool full = nv > 0;
  for (const auto& f : facets) {
    if (!full) break;
    EchelonBasis hull(dd + 1);
    QVector row(dd + 1, Rational(1));
    for (auto v : f.indices()) {
      std::copy(vertices[v].begin(), vertices[v].end(), row.begin());
      hull.add(row);
      if (hull.rank() == dd) break;
    }
    auto ns = hull.null_space();
    if (ns.size() != 1) {
      full = false;
      break;
    }
    ns[0].resize(dd);
    normals.push_back(std::move(ns[0]));
  }

  std::vector<Face> faces(order.size());
  const long nfaces = static_cast<long>(order.size());
  const bool par = exec == Exec::parallel;
  (void)par;
  POLYPROD_OMP(parallel for schedule(dynamic, 16) if(par))
  for (long i = 0; i < nfaces; ++i) {
    const auto k = static_cast<std::size_t>(i);
    int dim = -1;
    if (order[k].empty()) {
      dim = -1;
    } else if (full) {
      EchelonBasis span(dd);
      for (std::size_t j = 0; j < facets.size() && span.rank() < dd; ++j)
        if (order[k].is_subset_of(facets[j])) span.add(normals[j]);
      dim = d - static_cast<int>(span.rank());
    } else {
      std::vector<QVector> pts;
      for (auto v : order[k].indices()) pts.push_back(vertices[v]);
      dim = affine_dimension(pts);
    }
    faces[k] = Face{order[k], dim};
  }
  return FaceLattice(std::move(faces), nv, d);
}

FaceLattice face_lattice(const VPolytope& v, Exec exec) {
  std::vector<IndexSet> facets;
  std::unordered_set<IndexSet, IndexSetHash> unique;
  for (auto row : facet_rows(v)) {
    IndexSet s = vertices_on_row(v, row);
    if (unique.insert(s).second) facets.push_back(std::move(s));
  }
  return face_lattice(v.vertices, facets, exec);
}

std::size_t flag_f03(const FaceLattice& lattice) {
  if (lattice.dim() != 4) throw std::invalid_argument("flag_f03: lattice is not 4-dimensional");
  std::size_t total = 0;
  for (auto f : lattice.facets()) total += lattice.faces()[f].vertices.count();
  return total;
}

}  // namespace polyprod
