// Acceptance run: one line per criterion, nonzero exit if any fails.
#include "fixtures.hpp"
#include "oracles.hpp"

#include "polyprod/cli.hpp"
#include "polyprod/construction.hpp"
#include "polyprod/metrics.hpp"
#include "polyprod/pipeline.hpp"
#include "polyprod/positive.hpp"
#include "polyprod/projection.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <unistd.h>

using namespace polyprod;

namespace {

struct Criterion {
  bool ok = true;
  std::string detail;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

int failures = 0;

void report(int id, const Criterion& c, const std::string& summary) {
  std::cout << "criterion " << id << ": " << (c.ok ? "PASS" : "FAIL") << "  " << summary;
  if (!c.ok) std::cout << "  [" << c.detail << "]";
  std::cout << std::endl;
  failures += c.ok ? 0 : 1;
}

std::string tag(int n, int r) { return "(" + std::to_string(n) + "," + std::to_string(r) + ")"; }

Rational q(long num, long den) {
  Rational out(num, den);
  out.canonicalize();
  return out;
}

struct GridCase {
  int n, r;
  bool built = false;
  double seconds = 0;
  std::string failure;
  Instance inst;
  std::optional<VerifyReport> ver;
  std::optional<AnalyzeReport> ana;
};

std::string run_cli_capture(std::vector<std::string> args) {
  args.insert(args.begin(), "polyprod");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return std::to_string(code) + "\n" + out.str();
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

int main() {
  std::vector<GridCase> grid{{4, 2}, {6, 2}, {8, 2}, {4, 3}, {6, 3}, {4, 4}};
  for (auto& g : grid) {
    const auto t0 = std::chrono::steady_clock::now();
    try {
      const ConstructionParams p = choose_parameters(g.n, g.r);
      g.inst = load_instance(build_deformed_product(p), g.n, g.r);
      if (g.inst.ok()) {
        g.ver = verify(g.inst);
        g.ana = analyze(g.inst, g.n == 4 && g.r == 2);
      } else {
        g.failure = g.inst.failure;
      }
      g.built = true;
    } catch (const std::exception& e) {
      g.failure = e.what();
    }
    g.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }

  // 1. construction equivalence
  {
    Criterion c;
    std::string times;
    for (const auto& g : grid) {
      const std::string t = tag(g.n, g.r);
      c.expect(g.built && g.inst.ok(), t + " " + g.failure);
      if (!g.inst.ok()) continue;
      long expected = 1;
      for (int k = 0; k < g.r; ++k) expected *= g.n;
      c.expect(g.ver->product_ok, t + " product: " + g.ver->product_failure);
      c.expect(g.inst.setup->source_v.size() == static_cast<std::size_t>(expected), t + " vertex count");
      c.expect(g.seconds < 300, t + " over 5 minutes");
      char buf[48];
      std::snprintf(buf, sizeof buf, " %s %.1fs", t.c_str(), g.seconds);
      times += buf;
    }
    report(1, c, "choose_parameters + product_isomorphic, f0 = n^r, < 300 s each:" + times);
  }

  // 2. strict preservation for r >= 3
  {
    Criterion c;
    std::string counts;
    for (const auto& g : grid) {
      if (g.r < 3) continue;
      const std::string t = tag(g.n, g.r);
      if (!g.ver) {
        c.expect(false, t + " not built");
        continue;
      }
      const auto& v = *g.ver;
      long nr = 1;
      for (int k = 0; k < g.r; ++k) nr *= g.n;
      c.expect(v.vertices.total == static_cast<std::size_t>(nr) && v.vertices.all_direct(), t + " vertices");
      c.expect(v.edges.total == static_cast<std::size_t>(g.r * nr) && v.edges.all_direct(), t + " edges");
      c.expect(v.polygons.total == static_cast<std::size_t>(g.r * nr / g.n) && v.polygons.all_direct(),
               t + " polygons");
      c.expect(v.polygons.certified == v.polygons.total, t + " certificates");
      c.expect(v.vertices.implication_holds && v.edges.implication_holds && v.polygons.implication_holds,
               t + " certificate => direct");
      counts += " " + t + " " + std::to_string(v.vertices.total) + "/" + std::to_string(v.edges.total) + "/" +
                std::to_string(v.polygons.total);
    }
    report(2, c, "vertices/edges/polygon 2-faces strictly preserved, certificates pass:" + counts);
  }

  // 3. flag vectors
  {
    Criterion c;
    const std::map<std::pair<int, int>, FlagVector4> expected{
        {{4, 2}, {16, 32, 24, 8, 64}}, {{4, 3}, {64, 192, 192, 64, 512}}, {{6, 3}, {216, 648, 594, 162, 1728}}};
    for (const auto& g : grid) {
      if (!g.ana) continue;
      const std::string t = tag(g.n, g.r);
      c.expect(g.ana->actual == predicted_flag(g.n, g.r), t + " actual != predicted");
      if (auto it = expected.find({g.n, g.r}); it != expected.end())
        c.expect(g.ana->actual == it->second, t + " fixture mismatch");
    }
    const auto& g42 = grid.front();
    c.expect(g42.ana && g42.ana->printed && g42.ana->printed->f2 == 36 && g42.ana->actual.f2 == 24,
             "(4,2) printed f2 diagnostic");
    c.expect(g42.ana && g42.ana->printed && !g42.ana->printed->euler_holds, "(4,2) printed form satisfies Euler");
    report(3, c, "flag vectors equal corrected formula (exact); printed f2 at (4,2) is 36 vs 24 actual");
  }

  // 4. counting identities
  {
    Criterion c;
    std::size_t checked = 0;
    for (const auto& g : grid) {
      if (!g.ana) continue;
      const std::string t = tag(g.n, g.r);
      c.expect(g.ana->counting.has_value(), t + " " + g.ana->counting_failure);
      if (!g.ana->counting) continue;
      const auto& k = *g.ana->counting;
      c.expect(k.ridge_identity_ok, t + " 6C+(n+2)P = 2f2");
      c.expect(k.incidence_identity_ok, t + " f03 = 8C+2nP");
      c.expect(k.prism_count_ok, t + " P");
      c.expect(k.cube_count_ok, t + " C");
      c.expect(k.polygons_in_two_prisms, t + " polygon in two prisms");
      ++checked;
    }
    c.expect(checked == grid.size(), "not every instance analyzed");
    report(4, c, "6C+(n+2)P=2f2, f03=8C+2nP, P=rn^(r-1), C=(r-2)n^r/4, two prisms per polygon on " +
                     std::to_string(checked) + " instances");
  }

  // 5. certificate suite
  {
    Criterion c;
    for (long k = -20; k <= 20; ++k) {
      c.expect(zero_sum_check(k), "zero sum at k=" + std::to_string(k));
      const AlphaBeta ab = alpha_beta(k);
      c.expect(ab.alpha == oracle::alpha(k) && ab.beta == oracle::beta(k), "alpha/beta oracle at k=" + std::to_string(k));
      c.expect(ab.alpha >= 0 && ab.beta >= 0, "sign at k=" + std::to_string(k));
      c.expect((ab.alpha == 0) == (k == 0) && (ab.beta == 0) == (k == 0), "equality at k=" + std::to_string(k));
    }
    std::vector<std::pair<int, int>> cases{{4, 3}, {6, 3}, {4, 4}, {4, 10}};
    for (auto [n, r] : cases) {
      try {
        const auto certs = deletion_certificates(n, r);
        c.expect(certs.size() == static_cast<std::size_t>(r), tag(n, r) + " block count");
        for (const auto& cert : certs) {
          bool positive = true;
          for (std::size_t i = 0; i < cert.coefficients.size(); ++i) {
            const bool in_block = i / 2 + 1 == static_cast<std::size_t>(cert.t);
            positive = positive && (in_block ? cert.coefficients[i] == 0 : cert.coefficients[i] > 0);
          }
          c.expect(positive && cert.rank == static_cast<std::size_t>(2 * r - 4),
                   tag(n, r) + " block " + std::to_string(cert.t));
        }
      } catch (const std::exception& e) {
        c.expect(false, tag(n, r) + " " + e.what());
      }
    }
    report(5, c, "zero_sum and alpha,beta >= 0 (= 0 iff k = 0) for k in [-20,20]; deletion certificates for "
                 "(4,3),(6,3),(4,4),(4,10)");
  }

  // 6. metrics fixtures
  {
    Criterion c;
    const FlagVector4 cube = flag_vector(fixture::lattice_of(fixture::cube(4)));
    const FlagVector4 cell = flag_vector(fixture::lattice_of(fixture::cell24()));
    c.expect(fatness(cube) == q(18, 7), "fatness(4-cube)");
    c.expect(fatness(cell) == q(172, 38), "fatness(24-cell)");
    c.expect(to_decimal(fatness(cell), 3) == "4.526", "24-cell decimal");
    const Phi p = phi(cube);
    c.expect(3 * p.phi0 + p.phi3 == 1, "3 phi0 + phi3 on the 4-cube");
    for (const auto& f : {cube, cell}) {
      const Complexity cx = complexity(f);
      c.expect(cx.value >= 3 && cx.value == cx.g_form, "complexity forms");
    }
    report(6, c, "F(4-cube)=18/7, F(24-cell)=172/38=" + to_decimal(fatness(cell), 3) +
                     ", 3phi0+phi3=1 on 4-cube, C>=3 with both forms equal (exact)");
  }

  // 7. limits
  {
    Criterion c;
    const LimitValues big = limit_claims(1000000, 1000);
    c.expect(big.fatness > q(89, 10), "fatness at (10^6,10^3)");
    c.expect(big.complexity > q(159, 10), "complexity at (10^6,10^3)");
    for (int n : {4, 6, 8, 100}) {
      Rational prev = -1;
      for (int r = 2; r <= 50; ++r) {
        const LimitValues v = limit_claims(n, r);
        c.expect(v.fatness > prev, "monotone at " + tag(n, r));
        c.expect(v.fatness < 9 && v.complexity < 16, "bound at " + tag(n, r));
        prev = v.fatness;
      }
    }
    c.expect(big.fatness < 9 && big.complexity < 16, "bound at (10^6,10^3)");
    report(7, c, "F(10^6,10^3)=" + to_decimal(big.fatness, 6) + " > 8.9, C=" + to_decimal(big.complexity, 6) +
                     " > 15.9; F monotone in r in [2,50] for n in {4,6,8,100}; all < 9 and < 16");
  }

  // 8. property suites
  {
    Criterion c;
    std::mt19937 gen(2024);
    std::uniform_int_distribution<int> dim_dist(1, 4), entry(-5, 5);
    int spanning = 0;
    for (int trial = 0; trial < 200; ++trial) {
      const auto d = static_cast<std::size_t>(dim_dist(gen));
      std::uniform_int_distribution<int> count_dist(static_cast<int>(d), 8);
      const int count = count_dist(gen);
      std::vector<QVector> vs;
      for (int i = 0; i < count; ++i) {
        QVector v(d);
        for (auto& x : v) x = entry(gen);
        vs.push_back(std::move(v));
      }
      if (trial % 3 == 0) {
        QVector neg(d, Rational(0));
        for (const auto& v : vs)
          for (std::size_t j = 0; j < d; ++j) neg[j] -= v[j];
        vs.push_back(neg);
      }
      const bool got = static_cast<bool>(positively_spans(vs, d));
      spanning += got ? 1 : 0;
      c.expect(got == oracle::positively_spans(vs, d), "positively_spans trial " + std::to_string(trial));
    }

    std::uniform_int_distribution<int> coord(-6, 6);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t d = 2 + trial % 3;
      std::vector<QVector> pts = fixture::cube(d);
      for (int k = 0; k < 6; ++k) {
        QVector p(d);
        for (auto& x : p) x = q(coord(gen), 4);
        pts.push_back(p);
      }
      const HPolytope h = v_to_h(pts);
      const VPolytope v = h_to_v(h);
      const HPolytope h2 = v_to_h(v.vertices);
      c.expect(h2.num_rows() == h.num_rows() && h_to_v(h2).vertices == v.vertices,
               "round trip " + std::to_string(trial));
    }

    std::size_t lattices = 0;
    for (const auto& g : grid) {
      if (!g.inst.ok()) continue;
      c.expect(flag_vector(g.inst.setup->image_lattice).satisfies_euler(), tag(g.n, g.r) + " Euler");
      ++lattices;
    }
    for (const auto& pts : {fixture::cube(4), fixture::cell24(), fixture::simplex4()}) {
      c.expect(flag_vector(fixture::lattice_of(pts)).satisfies_euler(), "fixture Euler");
      ++lattices;
    }

    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / ("polyprod_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    bool identical = true;
    const std::string sys = (dir / "p43.json").string();
    for (int run = 0; run < 2; ++run) {
      const std::string out = (dir / ("c" + std::to_string(run) + ".json")).string();
      run_cli_capture({"construct", "--n", "4", "--r", "3", "-o", out});
    }
    identical = identical && slurp(dir / "c0.json") == slurp(dir / "c1.json");
    fs::copy_file(dir / "c0.json", sys, fs::copy_options::overwrite_existing);
    for (const auto& cmd : std::vector<std::vector<std::string>>{
             {"verify", sys}, {"analyze", sys}, {"sweep", "--n", "4,6", "--r", "2..3"}})
      identical = identical && run_cli_capture(cmd) == run_cli_capture(cmd);
    c.expect(identical, "CLI outputs differ between runs");
    fs::remove_all(dir);

    report(8, c, "positively_spans = oracle on 200 instances (" + std::to_string(spanning) +
                     " spanning); 20 DD round trips; Euler on " + std::to_string(lattices) +
                     " lattices; construct/verify/analyze/sweep byte-identical across two runs");
  }

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
