#ifndef POLYPROD_PIPELINE_HPP
#define POLYPROD_PIPELINE_HPP

#include "polyprod/metrics.hpp"
#include "polyprod/projection.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace polyprod {

// A deformed-product system together with its vertex enumeration, the
// projection to the last four coordinates, and both face lattices.
struct Instance {
  int n = 0;
  int r = 0;
  std::optional<ProjectionSetup> setup;
  std::optional<ProductLabeling> labeling;
  std::string failure;  // first failing stage, empty when usable

  bool ok() const { return failure.empty(); }
};

Instance load_instance(HPolytope system, int n, int r, Exec exec = Exec::parallel);

struct FaceTally {
  std::size_t total = 0;
  std::size_t direct = 0;
  std::size_t certified = 0;
  bool implication_holds = true;  // certificate => direct on every face
  bool all_direct() const { return direct == total; }
};

struct VerifyReport {
  int n = 0, r = 0;
  bool product_ok = false;
  std::string product_failure;
  bool zero_sum_ok = false;  // k in [-20, 20]
  bool deletion_ok = false;
  std::size_t deletion_blocks = 0;
  std::string deletion_failure;
  FaceTally vertices, edges, polygons;
  bool skeleton_counts_ok = false;  // f0(Q) = n^r, f1(Q) = r n^r
  std::vector<PreservationReport> polygon_reports;
  std::string note;
  std::string first_failure;  // empty iff every check passed

  bool ok() const { return first_failure.empty(); }
};

VerifyReport verify(const Instance& inst, Exec exec = Exec::parallel);

struct AnalyzeReport {
  int n = 0, r = 0;
  FlagVector4 actual;
  FlagVector4 predicted;
  bool flag_matches = false;
  Phi phi_values;
  GVector g;
  Rational fatness_value;
  Complexity complexity_value;
  ConeMembership cone;
  bool factor_two_bounds = false;  // C <= 2F-2 and F <= 2C-2
  std::optional<CountingReport> counting;
  std::string counting_failure;
  std::optional<PrintedForms> printed;
  std::string first_failure;

  bool ok() const { return first_failure.empty(); }
};

AnalyzeReport analyze(const Instance& inst, bool paper_literal = false);

nlohmann::ordered_json to_json(const VerifyReport& rep);
nlohmann::ordered_json to_json(const AnalyzeReport& rep);
nlohmann::ordered_json to_json(const FlagVector4& f);
nlohmann::ordered_json rational_field(const Rational& q);

}  // namespace polyprod

#endif  // POLYPROD_PIPELINE_HPP
