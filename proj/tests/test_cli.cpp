#include "polyprod/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

using namespace polyprod;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "polyprod");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("polyprod_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("construct") {
  TEST_CASE("explicit fixture parameters are byte-identical across runs") {
    const auto a = scratch() / "f1.json", b = scratch() / "f2.json";
    const Run r1 = run({"construct", "--n", "4", "--r", "2", "--eps", "1/16", "--big-m", "256", "-o", a.string()});
    const Run r2 = run({"construct", "--n", "4", "--r", "2", "--eps", "1/16", "--big-m", "256", "-o", b.string()});
    CHECK(r1.code == r2.code);
    CHECK(slurp(a) == slurp(b));
    const auto j = nlohmann::json::parse(slurp(a));
    CHECK(j["rows"].size() == 8);
    CHECK(j["params"]["eps"] == "1/16");
    // these values are too coarse; the log says why and the exit code is 1
    CHECK(r1.code == kExitFailure);
    CHECK(j["adaptation_log"][0]["outcome"].get<std::string>().find("vertex count 17") != std::string::npos);
  }

  TEST_CASE("auto parameters for (6,3)") {
    const auto path = scratch() / "p63.json";
    const Run r = run({"construct", "--n", "6", "--r", "3", "--eps", "auto", "--big-m", "auto", "-o", path.string()});
    CHECK(r.code == kExitOk);
    const auto j = nlohmann::json::parse(slurp(path));
    CHECK(j["rows"].size() == 18);
    CHECK(j["rows"][0].size() == 6);
    CHECK(j["labels"][17] == nlohmann::json::array({3, 5}));
    CHECK(j["adaptation_log"].back()["outcome"] == "accepted");
  }

  TEST_CASE("odd n is invalid input") {
    const Run r = run({"construct", "--n", "5", "--r", "3"});
    CHECK(r.code == kExitInvalid);
    CHECK(r.err.find("even") != std::string::npos);
  }

  TEST_CASE("decimal and malformed parameters are invalid input") {
    CHECK(run({"construct", "--n", "4", "--r", "2", "--eps", "0.5"}).code == kExitInvalid);
    CHECK(run({"construct", "--n", "4", "--r", "2", "--big-m", "x"}).code == kExitInvalid);
    CHECK(run({"construct", "--n", "4", "--r", "1"}).code == kExitInvalid);
    CHECK(run({"construct", "--n", "4"}).code == kExitInvalid);
    CHECK(run({}).code == kExitInvalid);
    CHECK(run({"frobnicate"}).code == kExitInvalid);
  }

  TEST_CASE("cdd output on request") {
    const auto json = scratch() / "p42.json", ine = scratch() / "p42.ine";
    CHECK(run({"construct", "--n", "4", "--r", "2", "-o", json.string(), "--ine", ine.string()}).code == kExitOk);
    const std::string text = slurp(ine);
    CHECK(text.rfind("H-representation\nbegin\n8 5 rational\n", 0) == 0);
  }
}

TEST_SUITE("verify and analyze") {
  TEST_CASE("(6,3) verifies with every polygon preserved") {
    const auto path = scratch() / "v63.json";
    REQUIRE(run({"construct", "--n", "6", "--r", "3", "-o", path.string()}).code == kExitOk);
    const Run v = run({"verify", path.string()});
    CHECK(v.code == kExitOk);
    const auto j = nlohmann::json::parse(v.out);
    CHECK(j["schema"] == 1);
    CHECK(j["ok"] == true);
    CHECK(j["preservation"]["polygons"]["total"] == 108);
    CHECK(j["preservation"]["polygons"]["strictly_preserved"] == 108);
    CHECK(j["polygon_faces"].size() == 108);

    const Run a = run({"analyze", path.string()});
    CHECK(a.code == kExitOk);
    const auto k = nlohmann::json::parse(a.out);
    CHECK(k["f"] == nlohmann::json::array({"216", "648", "594", "162"}));
    CHECK(k["f03"] == "1728");
    CHECK(k["fatness"]["exact"] == "611/184");  // 1222/368
    CHECK(k["identities"]["f03=8C+2nP"] == true);
  }

  TEST_CASE("swapped rhs entries fail verification") {
    const auto path = scratch() / "bad.json";
    REQUIRE(run({"construct", "--n", "4", "--r", "3", "-o", path.string()}).code == kExitOk);
    auto j = nlohmann::json::parse(slurp(path));
    std::swap(j["rhs"][0], j["rhs"][1]);
    std::ofstream(path) << j.dump(2);
    const Run v = run({"verify", path.string()});
    CHECK(v.code == kExitFailure);
    CHECK(v.err.find("product") != std::string::npos);
    CHECK(nlohmann::json::parse(v.out)["product_isomorphic"]["ok"] == false);
  }

  TEST_CASE("r = 2 is vacuous but passes") {
    const auto path = scratch() / "p42v.json";
    REQUIRE(run({"construct", "--n", "4", "--r", "2", "-o", path.string()}).code == kExitOk);
    const Run v = run({"verify", path.string(), "--jobs", "1"});
    CHECK(v.code == kExitOk);
    CHECK(nlohmann::json::parse(v.out)["note"] == "projection is identity; preservation vacuous");

    const Run a = run({"analyze", path.string(), "--paper-literal"});
    CHECK(a.code == kExitOk);
    const auto k = nlohmann::json::parse(a.out);
    CHECK(k["fatness"]["exact"] == "18/7");
    CHECK(k["printed_forms"]["f2_printed"] == "36");
    CHECK(k["printed_forms"]["f2_actual"] == "24");
    CHECK(k["printed_forms"]["f2_discrepancy"] == "12");
  }

  TEST_CASE("missing and malformed files") {
    CHECK(run({"verify", (scratch() / "nope.json").string()}).code == kExitInvalid);
    const auto path = scratch() / "garbage.json";
    std::ofstream(path) << "{\"dim\": 2}";
    CHECK(run({"analyze", path.string()}).code == kExitInvalid);
  }

  TEST_CASE("reports are byte-identical across runs and thread counts") {
    const auto path = scratch() / "d43.json";
    REQUIRE(run({"construct", "--n", "4", "--r", "3", "-o", path.string()}).code == kExitOk);
    const Run a = run({"verify", path.string(), "--jobs", "1"});
    const Run b = run({"verify", path.string(), "--jobs", "4"});
    CHECK(a.out == b.out);
    CHECK(run({"analyze", path.string()}).out == run({"analyze", path.string()}).out);
  }
}

TEST_SUITE("sweep") {
  TEST_CASE("grid n in {4,6,8}, r in {2,3}") {
    const Run r = run({"sweep", "--n", "8,4,6", "--r", "2..3"});
    CHECK(r.code == kExitOk);
    std::istringstream in(r.out);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) lines.push_back(line);
    REQUIRE(lines.size() == 7);
    CHECK(lines[1].rfind("4,2,16,32,24,8,64,18/7,", 0) == 0);
    CHECK(lines[6].rfind("8,3,", 0) == 0);
    for (std::size_t i = 1; i < lines.size(); ++i) CHECK(lines[i].substr(lines[i].rfind(',') + 1) == "pass");
  }

  TEST_CASE("empty range") {
    const Run r = run({"sweep", "--n", "4", "--r", "5..3"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "n,r,f0,f1,f2,f3,f03,fatness,complexity,fatness_approx,complexity_approx,geometry\n");
    const Run j = run({"sweep", "--n", "", "--r", "2", "--format", "json"});
    CHECK(j.code == kExitOk);
    CHECK(nlohmann::json::parse(j.out)["rows"].empty());
  }

  TEST_CASE("formula-only rows and the size budget") {
    const Run r = run({"sweep", "--n", "100", "--r", "2,3", "--format", "json", "--jobs", "2"});
    CHECK(r.code == kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["rows"].size() == 2);
    // 100^2 and 100^3 both exceed the default budget of 5000
    CHECK(j["rows"][0]["geometry"] == "formula-only");
    CHECK(j["rows"][1]["geometry"] == "formula-only");
    CHECK(j["rows"][0]["r"] == 2);

    const Run f = run({"sweep", "--n", "4", "--r", "2", "--formula-only"});
    CHECK(f.out.find("formula-only") != std::string::npos);
  }

  TEST_CASE("large formula sweep stays below 9 and 16") {
    const Run r = run({"sweep", "--n", "1000000", "--r", "1000", "--formula-only", "--format", "json"});
    CHECK(r.code == kExitOk);
    const auto row = nlohmann::json::parse(r.out)["rows"][0];
    CHECK(row["fatness"]["approx_derived"].get<std::string>().rfind("8.9", 0) == 0);
    CHECK(row["complexity"]["approx_derived"].get<std::string>().rfind("15.9", 0) == 0);
  }

  TEST_CASE("invalid ranges") {
    CHECK(run({"sweep", "--n", "5", "--r", "2"}).code == kExitInvalid);
    CHECK(run({"sweep", "--n", "4", "--r", "1"}).code == kExitInvalid);
    CHECK(run({"sweep", "--n", "4", "--r", "x"}).code == kExitInvalid);
    CHECK(run({"sweep", "--n", "4", "--r", "2", "--format", "xml"}).code == kExitInvalid);
  }

  TEST_CASE("deterministic output") {
    CHECK(run({"sweep", "--n", "4,6", "--r", "2..4", "--jobs", "3"}).out ==
          run({"sweep", "--n", "4,6", "--r", "2..4", "--jobs", "1"}).out);
  }
}

TEST_SUITE("export") {
  TEST_CASE("json to ine and back") {
    const auto json = scratch() / "e.json", ine = scratch() / "e.ine", back = scratch() / "e2.json";
    REQUIRE(run({"construct", "--n", "4", "--r", "2", "-o", json.string()}).code == kExitOk);
    CHECK(run({"export", json.string(), "--format", "ine", "-o", ine.string()}).code == kExitOk);
    CHECK(run({"export", ine.string(), "--format", "json", "-o", back.string()}).code == kExitOk);
    const auto a = nlohmann::json::parse(slurp(json)), b = nlohmann::json::parse(slurp(back));
    CHECK(a["rows"] == b["rows"]);
    CHECK(a["rhs"] == b["rhs"]);
  }

  TEST_CASE("vertices") {
    const auto json = scratch() / "ev.json";
    REQUIRE(run({"construct", "--n", "4", "--r", "2", "-o", json.string()}).code == kExitOk);
    const Run v = run({"export", json.string(), "--format", "json", "--vertices"});
    CHECK(v.code == kExitOk);
    CHECK(nlohmann::json::parse(v.out)["vertices"].size() == 16);
    const Run e = run({"export", json.string(), "--format", "ine", "--vertices"});
    CHECK(e.out.rfind("V-representation", 0) == 0);
    CHECK(run({"export", json.string(), "--format", "xml"}).code == kExitInvalid);
  }
}

TEST_CASE("integer lists") {
  CHECK(parse_int_list("4,6,8") == std::vector<int>{4, 6, 8});
  CHECK(parse_int_list("2..5") == std::vector<int>{2, 3, 4, 5});
  CHECK(parse_int_list("4,10..12") == std::vector<int>{4, 10, 11, 12});
  CHECK(parse_int_list("5..3").empty());
  CHECK(parse_int_list("").empty());
  CHECK_THROWS_AS(parse_int_list("a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_int_list("-3"), std::invalid_argument);
}
