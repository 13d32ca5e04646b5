#include "polyprod/cli.hpp"

#include "polyprod/construction.hpp"
#include "polyprod/io.hpp"
#include "polyprod/pipeline.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

namespace polyprod {

using nlohmann::ordered_json;

namespace {

// Thrown for input that cannot be acted on (exit code 2).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::optional<Rational> parse_param(const std::string& text, const char* name) {
  if (text == "auto") return std::nullopt;
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument&) {
    throw InputError(std::string(name) + " must be 'auto', an integer or p/q (got '" + text + "')");
  }
}

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write " + path);
  f << content;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

SystemFile load_system(const std::string& path) {
  SystemFile file;
  try {
    file = read_system_file(path);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  if (file.n < 3 || file.r < 1) throw InputError(path + ": cannot determine n and r (no params or labels)");
  return file;
}

Exec exec_for(int jobs) {
  if (jobs > 0) set_threads(jobs);
  return jobs == 1 ? Exec::serial : Exec::parallel;
}

struct ConstructOptions {
  int n = 0, r = 0;
  std::string eps = "auto", big_m = "auto", output, ine;
  bool force = false;
};

int cmd_construct(const ConstructOptions& o, std::ostream& out, std::ostream& err) {
  const auto eps = parse_param(o.eps, "--eps");
  const auto big_m = parse_param(o.big_m, "--big-m");
  if (o.n % 2 != 0 && !o.force) throw InputError("n must be even (n >= 4); pass --force to build anyway");
  ConstructionParams start = initial_parameters(o.n, o.r, o.force);
  if (eps) start.eps = *eps;
  if (big_m) start.big_m = *big_m;
  try {
    validate_params(start);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  ConstructionParams params;
  std::string rejected;
  if (eps && big_m) {
    // explicit values are checked once and written either way; the log
    // carries the outcome
    params = start;
    rejected = try_parameters(params);
    params.adaptation_log.push_back({params.eps, params.big_m, rejected.empty() ? "accepted" : rejected});
  } else {
    try {
      params = adapt_parameters(start, !eps, !big_m);
    } catch (const std::runtime_error& e) {
      err << "construct: " << e.what() << "\n";
      return kExitFailure;
    }
  }
  const HPolytope h = build_deformed_product(params);
  write_output(o.output, dump(construction_to_json(params, h)), out);
  if (!o.ine.empty()) {
    std::ostringstream ss;
    write_cdd(ss, h);
    write_output(o.ine, ss.str(), out);
  }
  if (!rejected.empty()) {
    err << "construct: parameters rejected: " << rejected << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_verify(const std::string& input, const std::string& output, int jobs, std::ostream& out,
               std::ostream& err) {
  const SystemFile file = load_system(input);
  const Exec exec = exec_for(jobs);
  const Instance inst = load_instance(file.system, file.n, file.r, exec);
  const VerifyReport rep = verify(inst, exec);
  write_output(output, dump(to_json(rep)), out);
  if (!rep.ok()) {
    err << "verify: " << rep.first_failure << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_analyze(const std::string& input, const std::string& output, bool paper_literal, int jobs,
                std::ostream& out, std::ostream& err) {
  const SystemFile file = load_system(input);
  const Exec exec = exec_for(jobs);
  const Instance inst = load_instance(file.system, file.n, file.r, exec);
  const AnalyzeReport rep = analyze(inst, paper_literal);
  write_output(output, dump(to_json(rep)), out);
  if (!rep.ok()) {
    err << "analyze: " << rep.first_failure << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

struct SweepOptions {
  std::string n_list, r_list, format = "csv", output;
  bool formula_only = false;
  long budget = 5000;
  int jobs = 0;
};

struct SweepRow {
  int n = 0, r = 0;
  FlagVector4 flag;
  Rational fatness, complexity;
  std::string geometry;  // "pass", "fail: ...", "formula-only"
};

bool within_budget(int n, int r, long budget) {
  long long v = 1;
  for (int k = 0; k < r; ++k) {
    v *= n;
    if (v > budget) return false;
  }
  return true;
}

std::string geometric_check(int n, int r, Exec exec) {
  try {
    const ConstructionParams p = choose_parameters(n, r, exec);
    const Instance inst = load_instance(build_deformed_product(p), n, r, exec);
    const VerifyReport v = verify(inst, exec);
    if (!v.ok()) return "fail: " + v.first_failure;
    const AnalyzeReport a = analyze(inst);
    if (!a.ok()) return "fail: " + a.first_failure;
    return "pass";
  } catch (const std::exception& e) {
    return std::string("fail: ") + e.what();
  }
}

int cmd_sweep(const SweepOptions& o, std::ostream& out, std::ostream& err) {
  std::vector<int> ns, rs;
  try {
    ns = parse_int_list(o.n_list);
    rs = parse_int_list(o.r_list);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  if (o.format != "csv" && o.format != "json") throw InputError("--format must be csv or json");
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  std::sort(rs.begin(), rs.end());
  rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
  for (int n : ns)
    if (n < 4 || n % 2 != 0) throw InputError("n must be even and at least 4 (got " + std::to_string(n) + ")");
  for (int r : rs)
    if (r < 2) throw InputError("r must be at least 2 (got " + std::to_string(r) + ")");

  std::vector<SweepRow> rows;
  for (int n : ns)
    for (int r : rs) rows.push_back(SweepRow{n, r, {}, {}, {}, {}});

  if (o.jobs > 0) set_threads(o.jobs);
  // rows run concurrently; the kernels inside each row stay serial
  const Exec inner = (o.jobs == 1 || rows.size() > 1) ? Exec::serial : Exec::parallel;
  const long count = static_cast<long>(rows.size());
  POLYPROD_OMP(parallel for schedule(dynamic, 1) if(o.jobs != 1))
  for (long i = 0; i < count; ++i) {
    SweepRow& row = rows[static_cast<std::size_t>(i)];
    row.flag = predicted_flag(row.n, row.r);
    row.fatness = fatness(row.flag);
    row.complexity = complexity(row.flag).value;
    if (o.formula_only || !within_budget(row.n, row.r, o.budget)) row.geometry = "formula-only";
    else row.geometry = geometric_check(row.n, row.r, inner);
  }

  bool failed = false;
  std::ostringstream ss;
  if (o.format == "csv") {
    ss << "n,r,f0,f1,f2,f3,f03,fatness,complexity,fatness_approx,complexity_approx,geometry\n";
    for (const auto& row : rows) {
      ss << row.n << ',' << row.r << ',' << to_string(row.flag.f0) << ',' << to_string(row.flag.f1) << ','
         << to_string(row.flag.f2) << ',' << to_string(row.flag.f3) << ',' << to_string(row.flag.f03) << ','
         << to_string(row.fatness) << ',' << to_string(row.complexity) << ',' << to_decimal(row.fatness) << ','
         << to_decimal(row.complexity) << ',' << row.geometry << '\n';
    }
  } else {
    ordered_json j;
    j["schema"] = 1;
    j["command"] = "sweep";
    ordered_json arr = ordered_json::array();
    for (const auto& row : rows) {
      ordered_json e;
      e["n"] = row.n;
      e["r"] = row.r;
      const auto flag = to_json(row.flag);
      e["f"] = flag["f"];
      e["f03"] = flag["f03"];
      e["fatness"] = rational_field(row.fatness);
      e["complexity"] = rational_field(row.complexity);
      e["geometry"] = row.geometry;
      arr.push_back(std::move(e));
    }
    j["rows"] = std::move(arr);
    ss << dump(j);
  }
  for (const auto& row : rows) failed = failed || row.geometry.rfind("fail", 0) == 0;
  write_output(o.output, ss.str(), out);
  if (failed) {
    err << "sweep: geometric verification failed for at least one row\n";
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_export(const std::string& input, const std::string& format, bool vertices, const std::string& output,
               std::ostream& out) {
  if (format != "ine" && format != "json") throw InputError("--format must be ine or json");
  const std::string text = slurp(input);
  const auto first = text.find_first_not_of(" \t\r\n");
  HPolytope h;
  try {
    if (first != std::string::npos && text[first] == '{') {
      h = load_system(input).system;
    } else {
      std::istringstream in(text);
      h = read_cdd_h(in);
    }
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  std::ostringstream ss;
  if (vertices) {
    const VPolytope v = h_to_v(h);
    if (format == "ine") write_cdd(ss, v);
    else ss << dump(to_json(v));
  } else {
    if (format == "ine") write_cdd(ss, h);
    else ss << dump(to_json(h));
  }
  write_output(output, ss.str(), out);
  return kExitOk;
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  auto to_int = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("not a non-negative integer: '" + s + "'");
    return std::stoi(s);
  };
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(to_int(item));
      continue;
    }
    const int lo = to_int(item.substr(0, dots));
    const int hi = to_int(item.substr(dots + 2));
    for (int v = lo; v <= hi; ++v) out.push_back(v);
  }
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact construction and verification of projected deformed products of polygons"};
  app.require_subcommand(1);

  ConstructOptions co;
  auto* construct = app.add_subcommand("construct", "Build the labeled inequality system");
  construct->add_option("--n", co.n, "Polygon size (even, >= 4)")->required();
  construct->add_option("--r", co.r, "Number of factors (>= 2)")->required();
  construct->add_option("--eps", co.eps, "Perturbation: 'auto' or p/q");
  construct->add_option("--big-m", co.big_m, "Right-hand side growth: 'auto' or p/q");
  construct->add_option("-o,--output", co.output, "JSON output file (default stdout)");
  construct->add_option("--ine", co.ine, "Also write a cdd H-representation");
  construct->add_flag("--force", co.force, "Allow odd n (exploration only)");

  std::string input, output;
  int jobs = 0;
  bool paper_literal = false;
  auto* verify_cmd = app.add_subcommand("verify", "Check product structure, certificates and preservation");
  verify_cmd->add_option("input", input, "System JSON")->required();
  verify_cmd->add_option("-o,--output", output, "Report file (default stdout)");
  verify_cmd->add_option("--jobs", jobs, "OpenMP threads (1 = serial reference path)");

  auto* analyze_cmd = app.add_subcommand("analyze", "Flag vector, metrics and counting identities");
  analyze_cmd->add_option("input", input, "System JSON")->required();
  analyze_cmd->add_option("-o,--output", output, "Report file (default stdout)");
  analyze_cmd->add_flag("--paper-literal", paper_literal, "Also evaluate the closed forms as printed");
  analyze_cmd->add_option("--jobs", jobs, "OpenMP threads (1 = serial reference path)");

  SweepOptions so;
  auto* sweep = app.add_subcommand("sweep", "Tabulate predicted flag vectors, fatness and complexity");
  sweep->add_option("--n", so.n_list, "List/ranges of n, e.g. 4,6,8 or 4..10")->required();
  sweep->add_option("--r", so.r_list, "List/ranges of r")->required();
  sweep->add_option("--format", so.format, "csv or json");
  sweep->add_flag("--formula-only", so.formula_only, "Skip geometric verification");
  sweep->add_option("--budget", so.budget, "Largest n^r verified geometrically");
  sweep->add_option("--jobs", so.jobs, "Rows computed concurrently");
  sweep->add_option("-o,--output", so.output, "Output file (default stdout)");

  std::string format = "ine";
  bool vertices = false;
  auto* export_cmd = app.add_subcommand("export", "Convert a system between JSON and cdd text");
  export_cmd->add_option("input", input, "System JSON or cdd .ine")->required();
  export_cmd->add_option("--format", format, "ine or json");
  export_cmd->add_flag("--vertices", vertices, "Export the V-representation instead");
  export_cmd->add_option("-o,--output", output, "Output file (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInvalid;
  }

  try {
    if (*construct) return cmd_construct(co, out, err);
    if (*verify_cmd) return cmd_verify(input, output, jobs, out, err);
    if (*analyze_cmd) return cmd_analyze(input, output, paper_literal, jobs, out, err);
    if (*sweep) return cmd_sweep(so, out, err);
    if (*export_cmd) return cmd_export(input, format, vertices, output, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitInvalid;
}

}  // namespace polyprod
