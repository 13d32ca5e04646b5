#include "polyprod/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace polyprod {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

ordered_json rationals(std::span<const Rational> v) {
  ordered_json a = ordered_json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

Rational scalar(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("expected a rational string");
}

}  // namespace

ordered_json to_json(const HPolytope& h) {
  ordered_json j;
  j["dim"] = h.dim();
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < h.num_rows(); ++i) rows.push_back(rationals(h.a.row(i)));
  j["rows"] = std::move(rows);
  j["rhs"] = rationals(h.b);
  if (h.labeled()) {
    ordered_json labels = ordered_json::array();
    for (const auto& l : h.labels) labels.push_back({l.block, l.index});
    j["labels"] = std::move(labels);
  }
  return j;
}

HPolytope hpolytope_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("rows") || !j.contains("rhs"))
    throw std::invalid_argument("polytope JSON needs dim, rows and rhs");
  const auto d = j.at("dim").get<std::size_t>();
  const auto& rows = j.at("rows");
  const auto& rhs = j.at("rhs");
  if (!rows.is_array() || !rhs.is_array() || rows.size() != rhs.size())
    throw std::invalid_argument("rows and rhs must be arrays of equal length");
  HPolytope h;
  h.a = QMatrix(rows.size(), d);
  h.b.resize(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].is_array() || rows[i].size() != d) throw std::invalid_argument("row length differs from dim");
    for (std::size_t c = 0; c < d; ++c) h.a(i, c) = scalar(rows[i][c]);
    h.b[i] = scalar(rhs[i]);
  }
  if (j.contains("labels")) {
    const auto& labels = j.at("labels");
    if (!labels.is_array() || labels.size() != rows.size())
      throw std::invalid_argument("labels must match rows");
    for (const auto& l : labels) {
      if (!l.is_array() || l.size() != 2) throw std::invalid_argument("label must be [block, index]");
      h.labels.push_back(RowLabel{l[0].get<int>(), l[1].get<int>()});
    }
  }
  return h;
}

ordered_json to_json(const VPolytope& v) {
  ordered_json j;
  j["dim"] = v.dim();
  ordered_json verts = ordered_json::array();
  for (const auto& x : v.vertices) verts.push_back(rationals(x));
  j["vertices"] = std::move(verts);
  ordered_json inc = ordered_json::array();
  for (const auto& s : v.incidence) inc.push_back(s.indices());
  j["incidence"] = std::move(inc);
  return j;
}

ordered_json construction_to_json(const ConstructionParams& p, const HPolytope& h) {
  ordered_json j = to_json(h);
  ordered_json params;
  params["n"] = p.n;
  params["r"] = p.r;
  params["eps"] = to_string(p.eps);
  params["bigM"] = to_string(p.big_m);
  j["params"] = std::move(params);
  ordered_json log = ordered_json::array();
  for (const auto& step : p.adaptation_log) {
    ordered_json e;
    e["eps"] = to_string(step.eps);
    e["bigM"] = to_string(step.big_m);
    e["outcome"] = step.outcome;
    log.push_back(std::move(e));
  }
  j["adaptation_log"] = std::move(log);
  return j;
}

SystemFile read_system_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  SystemFile f;
  try {
    f.system = hpolytope_from_json(j);
    if (j.contains("params")) {
      const auto& p = j.at("params");
      f.n = p.at("n").get<int>();
      f.r = p.at("r").get<int>();
      if (p.contains("eps")) f.eps = scalar(p.at("eps"));
      if (p.contains("bigM")) f.big_m = scalar(p.at("bigM"));
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  if (f.n == 0 && f.system.labeled()) {
    for (const auto& l : f.system.labels) {
      f.r = std::max(f.r, l.block);
      f.n = std::max(f.n, l.index + 1);
    }
  }
  return f;
}

void write_cdd(std::ostream& out, const HPolytope& h) {
  out << "H-representation\nbegin\n";
  out << h.num_rows() << ' ' << h.dim() + 1 << " rational\n";
  for (std::size_t i = 0; i < h.num_rows(); ++i) {
    out << to_string(h.b[i]);
    for (const auto& x : h.a.row(i)) out << ' ' << to_string(Rational(-x));
    out << '\n';
  }
  out << "end\n";
}

void write_cdd(std::ostream& out, const VPolytope& v) {
  out << "V-representation\nbegin\n";
  out << v.size() << ' ' << v.dim() + 1 << " rational\n";
  for (const auto& x : v.vertices) {
    out << '1';
    for (const auto& c : x) out << ' ' << to_string(c);
    out << '\n';
  }
  out << "end\n";
}

HPolytope read_cdd_h(std::istream& in) {
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.rfind("H-representation", 0) == 0) header = true;
    if (line == "begin") break;
  }
  if (!header || !in) throw std::invalid_argument("cdd: expected H-representation ... begin");
  std::size_t m = 0, cols = 0;
  std::string kind;
  if (!(in >> m >> cols >> kind) || cols < 2) throw std::invalid_argument("cdd: bad size line");
  if (kind != "rational" && kind != "integer") throw std::invalid_argument("cdd: number type must be rational");
  HPolytope h;
  h.a = QMatrix(m, cols - 1);
  h.b.resize(m);
  std::string token;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (!(in >> token)) throw std::invalid_argument("cdd: truncated row");
      const Rational x = parse_rational(token);
      if (c == 0) h.b[i] = x;
      else h.a(i, c - 1) = -x;
    }
  }
  if (!(in >> token) || token != "end") throw std::invalid_argument("cdd: missing end");
  return h;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace polyprod
