#ifndef POLYPROD_IO_HPP
#define POLYPROD_IO_HPP

#include "polyprod/construction.hpp"
#include "polyprod/polytope.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>

namespace polyprod {

// {"dim": d, "rows": [["-31/4","1/2"],...], "rhs": [...], "labels": [[1,0],...]}
nlohmann::ordered_json to_json(const HPolytope& h);
// Throws std::invalid_argument on malformed input.
HPolytope hpolytope_from_json(const nlohmann::json& j);

// {"dim": d, "vertices": [[...],...], "incidence": [[row,...],...]}
nlohmann::ordered_json to_json(const VPolytope& v);

// Construction output: the H-system plus "params" and "adaptation_log".
nlohmann::ordered_json construction_to_json(const ConstructionParams& p, const HPolytope& h);
// Reads n, r (and eps, M when present) back; n and r fall back to the
// labels when "params" is absent.
struct SystemFile {
  HPolytope system;
  int n = 0;
  int r = 0;
  std::optional<Rational> eps;
  std::optional<Rational> big_m;
};
SystemFile read_system_file(const std::string& path);

// cdd text formats. Rows are written as "b -a_1 ... -a_d" with rational
// tokens in canonical form.
void write_cdd(std::ostream& out, const HPolytope& h);
void write_cdd(std::ostream& out, const VPolytope& v);
HPolytope read_cdd_h(std::istream& in);

std::string dump(const nlohmann::ordered_json& j);

}  // namespace polyprod

#endif  // POLYPROD_IO_HPP
