#include "polyprod/pipeline.hpp"

#include <stdexcept>

namespace polyprod {

using nlohmann::ordered_json;

namespace {

FaceTally tally(const std::vector<PreservationReport>& reports) {
  FaceTally t;
  t.total = reports.size();
  for (const auto& rep : reports) {
    t.direct += rep.direct_ok ? 1 : 0;
    t.certified += rep.certificate_ok ? 1 : 0;
    if (rep.certificate_ok && !rep.direct_ok) t.implication_holds = false;
  }
  return t;
}

std::vector<IndexSet> faces_of_dim(const FaceLattice& lattice, int k) {
  std::vector<IndexSet> out;
  for (auto id : lattice.faces_of_dim(k)) out.push_back(lattice.faces()[id].vertices);
  return out;
}

ordered_json tally_json(const FaceTally& t) {
  ordered_json j;
  j["total"] = t.total;
  j["strictly_preserved"] = t.direct;
  j["certified"] = t.certified;
  j["certificate_implies_direct"] = t.implication_holds;
  return j;
}

}  // namespace

Instance load_instance(HPolytope system, int n, int r, Exec exec) {
  Instance inst;
  inst.n = n;
  inst.r = r;
  if (!system.labeled()) {
    inst.failure = "system has no row labels";
    return inst;
  }
  if (system.dim() != static_cast<std::size_t>(2 * r) || system.num_rows() != static_cast<std::size_t>(n * r)) {
    inst.failure = "system shape does not match (n, r)";
    return inst;
  }
  try {
    inst.setup = prepare_projection(std::move(system), 4, exec);
  } catch (const PolytopeError& e) {
    inst.failure = std::string("product: vertex enumeration failed (") + e.what() + ")";
    return inst;
  }
  auto product = check_product(inst.setup->source_v, inst.setup->source_h.labels, n, r);
  if (!product.labeling) {
    inst.failure = "product: " + product.failure;
    return inst;
  }
  inst.labeling = std::move(product.labeling);
  return inst;
}

VerifyReport verify(const Instance& inst, Exec exec) {
  VerifyReport rep;
  rep.n = inst.n;
  rep.r = inst.r;
  auto fail = [&rep](const std::string& what) {
    if (rep.first_failure.empty()) rep.first_failure = what;
  };

  rep.product_ok = inst.labeling.has_value();
  if (!rep.product_ok) {
    rep.product_failure = inst.failure;
    fail(inst.failure.empty() ? "product" : inst.failure);
  }

  rep.zero_sum_ok = true;
  for (std::int64_t k = -20; k <= 20; ++k) rep.zero_sum_ok = rep.zero_sum_ok && zero_sum_check(k);
  if (!rep.zero_sum_ok) fail("zero-sum identity");

  try {
    rep.deletion_blocks = deletion_certificates(inst.n, inst.r).size();
    rep.deletion_ok = true;
  } catch (const std::exception& e) {
    rep.deletion_failure = e.what();
    fail(std::string("deletion certificates: ") + e.what());
  }

  if (!inst.ok()) return rep;
  const ProjectionSetup& s = *inst.setup;
  if (inst.r == 2) rep.note = "projection is identity; preservation vacuous";

  const auto vertex_faces = faces_of_dim(s.source_lattice, 0);
  const auto edge_faces = faces_of_dim(s.source_lattice, 1);
  rep.vertices = tally(check_faces(s, vertex_faces, exec));
  rep.edges = tally(check_faces(s, edge_faces, exec));

  const auto polygon_faces = enumerate_polygon_faces(*inst.labeling);
  std::vector<IndexSet> polygon_sets;
  for (const auto& p : polygon_faces) polygon_sets.push_back(p.vertices);
  rep.polygon_reports = check_faces(s, polygon_sets, exec);
  for (std::size_t i = 0; i < polygon_faces.size(); ++i) rep.polygon_reports[i].factor = polygon_faces[i].factor;
  rep.polygons = tally(rep.polygon_reports);

  const auto fq = s.image_lattice.f_vector();
  std::size_t nr = 1;
  for (int k = 0; k < inst.r; ++k) nr *= static_cast<std::size_t>(inst.n);
  rep.skeleton_counts_ok = fq.size() == 4 && fq[0] == nr && fq[1] == static_cast<std::size_t>(inst.r) * nr &&
                           rep.vertices.total == nr && rep.edges.total == static_cast<std::size_t>(inst.r) * nr;

  if (!rep.vertices.all_direct()) fail("vertex preservation");
  if (!rep.edges.all_direct()) fail("edge preservation");
  if (!rep.skeleton_counts_ok) fail("1-skeleton counts");
  if (!rep.polygons.all_direct()) fail("polygon preservation");
  if (rep.polygons.certified != rep.polygons.total) fail("polygon certificates");
  if (!(rep.vertices.implication_holds && rep.edges.implication_holds && rep.polygons.implication_holds))
    fail("certificate without direct preservation");
  return rep;
}

AnalyzeReport analyze(const Instance& inst, bool paper_literal) {
  AnalyzeReport rep;
  rep.n = inst.n;
  rep.r = inst.r;
  if (!inst.ok()) {
    rep.first_failure = inst.failure;
    return rep;
  }
  const ProjectionSetup& s = *inst.setup;
  rep.actual = flag_vector(s.image_lattice);
  rep.predicted = predicted_flag(inst.n, inst.r);
  rep.flag_matches = rep.actual == rep.predicted;
  rep.phi_values = phi(rep.actual);
  rep.g = g_vector(rep.actual);
  rep.fatness_value = fatness(rep.actual);
  rep.complexity_value = complexity(rep.actual);
  rep.cone = cone_membership(rep.actual);
  const Rational& f = rep.fatness_value;
  const Rational& c = rep.complexity_value.value;
  rep.factor_two_bounds = c <= 2 * f - 2 && f <= 2 * c - 2;

  std::vector<IndexSet> polygons;
  for (const auto& p : enumerate_polygon_faces(*inst.labeling)) {
    IndexSet image(s.image_v.size());
    bool ok = true;
    for (auto k : p.vertices.indices()) {
      if (s.image_vertex[k]) image.set(*s.image_vertex[k]);
      else ok = false;
    }
    if (ok) polygons.push_back(std::move(image));
  }
  try {
    rep.counting = counting_identities(s.image_lattice, polygons, inst.n, inst.r);
  } catch (const std::runtime_error& e) {
    rep.counting_failure = e.what();
  }
  if (paper_literal) rep.printed = printed_forms(inst.n, inst.r, rep.actual);

  if (!rep.flag_matches) rep.first_failure = "flag vector differs from prediction";
  else if (!rep.counting) rep.first_failure = "counting identities: " + rep.counting_failure;
  else if (!rep.counting->all()) rep.first_failure = "counting identities";
  else if (!rep.cone.all()) rep.first_failure = "cone membership";
  else if (!rep.factor_two_bounds) rep.first_failure = "fatness/complexity factor-two bounds";
  return rep;
}

ordered_json rational_field(const Rational& q) {
  ordered_json j;
  j["exact"] = to_string(q);
  j["approx_derived"] = to_decimal(q, 6);
  return j;
}

ordered_json to_json(const FlagVector4& f) {
  ordered_json j;
  j["f"] = {to_string(f.f0), to_string(f.f1), to_string(f.f2), to_string(f.f3)};
  j["f03"] = to_string(f.f03);
  return j;
}

ordered_json to_json(const VerifyReport& rep) {
  ordered_json j;
  j["schema"] = 1;
  j["command"] = "verify";
  j["n"] = rep.n;
  j["r"] = rep.r;
  j["ok"] = rep.ok();
  if (!rep.ok()) j["first_failure"] = rep.first_failure;
  if (!rep.note.empty()) j["note"] = rep.note;
  ordered_json product;
  product["ok"] = rep.product_ok;
  if (!rep.product_failure.empty()) product["failure"] = rep.product_failure;
  j["product_isomorphic"] = std::move(product);
  j["zero_sum_k_range"] = {-20, 20};
  j["zero_sum_ok"] = rep.zero_sum_ok;
  ordered_json del;
  del["ok"] = rep.deletion_ok;
  del["blocks"] = rep.deletion_blocks;
  if (!rep.deletion_failure.empty()) del["failure"] = rep.deletion_failure;
  j["deletion_certificates"] = std::move(del);
  ordered_json pres;
  pres["vertices"] = tally_json(rep.vertices);
  pres["edges"] = tally_json(rep.edges);
  pres["polygons"] = tally_json(rep.polygons);
  pres["skeleton_counts_ok"] = rep.skeleton_counts_ok;
  j["preservation"] = std::move(pres);
  ordered_json faces = ordered_json::array();
  for (std::size_t i = 0; i < rep.polygon_reports.size(); ++i) {
    const auto& p = rep.polygon_reports[i];
    ordered_json e;
    e["face_id"] = p.face_id;
    e["factor"] = p.factor;
    e["direct_ok"] = p.direct_ok;
    e["certificate_ok"] = p.certificate_ok;
    e["details"] = p.details;
    faces.push_back(std::move(e));
  }
  j["polygon_faces"] = std::move(faces);
  return j;
}

ordered_json to_json(const AnalyzeReport& rep) {
  ordered_json j;
  j["schema"] = 1;
  j["command"] = "analyze";
  j["n"] = rep.n;
  j["r"] = rep.r;
  j["ok"] = rep.ok();
  if (!rep.ok()) j["first_failure"] = rep.first_failure;
  if (rep.actual.f0 == 0) return j;
  const auto flag = to_json(rep.actual);
  j["f"] = flag["f"];
  j["f03"] = flag["f03"];
  j["predicted"] = to_json(rep.predicted);
  j["flag_matches_prediction"] = rep.flag_matches;
  j["phi0"] = rational_field(rep.phi_values.phi0);
  j["phi3"] = rational_field(rep.phi_values.phi3);
  j["fatness"] = rational_field(rep.fatness_value);
  j["complexity"] = rational_field(rep.complexity_value.value);
  j["complexity_g_form"] = rational_field(rep.complexity_value.g_form);
  j["g1"] = to_string(rep.g.g1);
  j["g1_dual"] = to_string(rep.g.g1_dual);
  j["g2"] = to_string(rep.g.g2);
  ordered_json cone;
  cone["phi0>=0"] = rep.cone.phi0_nonneg;
  cone["phi3>=0"] = rep.cone.phi3_nonneg;
  cone["phi0+3phi3<=1"] = rep.cone.simplicial_bound;
  cone["3phi0+phi3<=1"] = rep.cone.simple_bound;
  cone["phi0+phi3<=2/5"] = rep.cone.g2_bound;
  j["cone"] = std::move(cone);
  j["factor_two_bounds"] = rep.factor_two_bounds;
  ordered_json ids;
  if (rep.counting) {
    const auto& c = *rep.counting;
    ids["prisms"] = c.prisms;
    ids["cubes"] = c.cubes;
    ids["P=r*n^(r-1)"] = c.prism_count_ok;
    ids["C=(r-2)n^r/4"] = c.cube_count_ok;
    ids["6C+(n+2)P=2f2"] = c.ridge_identity_ok;
    ids["f03=8C+2nP"] = c.incidence_identity_ok;
    ids["polygon_in_two_prisms"] = c.polygons_in_two_prisms;
  } else {
    ids["failure"] = rep.counting_failure;
  }
  j["identities"] = std::move(ids);
  if (rep.printed) {
    const auto& p = *rep.printed;
    ordered_json lit;
    lit["f2_printed"] = to_string(p.f2);
    lit["f2_actual"] = to_string(rep.actual.f2);
    lit["f2_discrepancy"] = to_string(Rational(p.f2 - Rational(rep.actual.f2)));
    lit["euler_with_printed_f2"] = p.euler_holds;
    lit["fatness_printed_form"] = rational_field(p.fatness);
    lit["fatness_discrepancy"] = to_string(Rational(p.fatness - rep.fatness_value));
    lit["phi3_printed_form"] = rational_field(p.phi3);
    lit["complexity_printed_form"] = rational_field(p.complexity);
    lit["complexity_discrepancy"] = to_string(Rational(p.complexity - rep.complexity_value.value));
    j["printed_forms"] = std::move(lit);
  }
  return j;
}

}  // namespace polyprod
