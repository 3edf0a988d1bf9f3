#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hecke_atlas/cli.hpp"
#include "hecke_atlas/corpus.hpp"
#include "hecke_atlas/json_io.hpp"
#include "hecke_atlas/verify.hpp"
#include "helpers.hpp"

using namespace th;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "hecke_atlas");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = hecke_atlas::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("hecke_atlas_test_" + name);
  std::ofstream(path) << body;
  return path.string();
}

const char* kSo7Param = R"({
  "classes": [{"label": "triv", "dim": 1, "torsion": 1,
               "duality": {"kind": "self_dual", "type_plus": "orthogonal", "type_minus": "orthogonal"},
               "det_base": "triv"}],
  "ambient": {"family": "symplectic", "dim": 6},
  "summands": [{"class": "triv", "f": {"root": "0/1", "qexp": "0/2"}, "a": 1, "mult": 6}]
})";

}  // namespace

TEST_CASE("specialize prints the table") {
  auto r = run({"specialize", "--kind", "so-odd", "--rank", "2"});
  CHECK(r.code == 0);
  auto j = json_io::parse(r.out);
  CHECK(j["rows"].size() == 4);
  CHECK(j["rows"][0]["factor"]["internal"] == "2/2");
}

TEST_CASE("input errors exit with 2") {
  CHECK(run({"enumerate", "--group", "sp", "--rank", "0"}).code == 2);
  CHECK(run({"specialize", "--kind", "so-odd", "--rank", "2", "--bogus"}).code == 2);
  CHECK(run({"verify", "--suite", "nope"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"supports", "--param", temp_file("bad.json", "{not json")}).code == 2);
  CHECK(run({"supports", "--param", "/nonexistent/p.json"}).code == 2);
}

TEST_CASE("verify exit codes") {
  CHECK(run({"verify", "--suite", "lemA3", "--max-rank", "4"}).code == 0);
  // thm32 carries flagged cases
  CHECK(run({"verify", "--suite", "thm32", "--max-rank", "2"}).code == 1);
  CHECK(run({"verify", "--suite", "thm32", "--max-rank", "2", "--allow-flagged"}).code == 0);
}

TEST_CASE("verify writes a report") {
  const auto path = (std::filesystem::temp_directory_path() / "hecke_atlas_test_report.json").string();
  auto r = run({"verify", "--suite", "thm31", "--max-rank", "3", "--report", path});
  CHECK(r.code == 0);
  auto j = json_io::read_file(path);
  CHECK(j["suite"] == "thm31");
  CHECK(j["passed"] == 3);
  CHECK(j["failed"] == 0);
  CHECK(j["flagged"] == 0);
  CHECK(j["cases"][0]["digest"].get<std::string>().size() == 16);
  CHECK(j["cases"][0]["digest"] == verify::fnv1a_hex(j["cases"][0]["input"].get<std::string>()));
}

TEST_CASE("fnv1a") {
  CHECK(verify::fnv1a_hex("") == "cbf29ce484222325");
  CHECK(verify::fnv1a_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("supports and hecke from a parameter file") {
  const auto path = temp_file("so7.json", kSo7Param);
  auto s = run({"supports", "--param", path});
  REQUIRE(s.code == 0);
  auto j = json_io::parse(s.out);
  CHECK(j["supports"].size() == 6);
  for (const auto& p : j["supports"]) {
    CHECK(p.contains("S"));
    CHECK(p.contains("phiS"));
    CHECK(p.contains("LS"));
    CHECK(p.contains("lS"));
    CHECK(p.contains("dS"));
    CHECK(p.contains("levi"));
    CHECK(p.contains("epsilon"));
    CHECK(p.contains("epsZ"));
  }
  auto h = run({"hecke", "--param", path});
  REQUIRE(h.code == 0);
  auto k = json_io::parse(h.out);
  CHECK(k["descriptors"].size() == 6);
  CHECK(k["descriptors"][0]["normalized"][0]["family"] == "Sp");
}

TEST_CASE("enumerate") {
  const auto classes = temp_file("inv.json", json_io::dump(json_io::to_json(hecke_atlas::corpus::test_inventory())));
  auto r = run({"enumerate", "--group", "sp", "--rank", "2", "--classes", classes});
  REQUIRE(r.code == 0);
  auto j = json_io::parse(r.out);
  CHECK(j["mode"] == "cuspidal");
  CHECK(j["count"] == j["parameters"].size());
  auto d = run({"enumerate", "--group", "o-even", "--rank", "2", "--discrete"});
  REQUIRE(d.code == 0);
  CHECK(json_io::parse(d.out)["mode"] == "discrete");
  CHECK(run({"enumerate", "--group", "sp", "--rank", "2", "--discrete", "--cuspidal"}).code == 2);
}

TEST_CASE("inventory and parameter JSON round trip") {
  const auto inv = small_inventory();
  const auto back = json_io::inventory_from_json(json_io::to_json(inv));
  CHECK(json_io::to_json(back) == json_io::to_json(inv));
  auto phi = param(inv, {Family::Orthogonal, 5}, {{"triv", minus(), 3, 1}, {"eta", UnitMonomial::q_power(1), 1, 1},
                                                  {"eta_dual", UnitMonomial::q_power(-1), 1, 1}});
  CHECK(json_io::parameter_from_json(inv, json_io::to_json(phi)) == phi);
  CHECK(json_io::to_json(phi)["summands"][0]["f"]["qexp"] == "1/2");
}

TEST_CASE("output does not depend on the thread count") {
  setenv("HECKE_ATLAS_THREADS", "1", 1);
  const auto path1 = (std::filesystem::temp_directory_path() / "hecke_atlas_t1.json").string();
  const auto path4 = (std::filesystem::temp_directory_path() / "hecke_atlas_t4.json").string();
  run({"verify", "--suite", "thm11", "--max-rank", "7", "--report", path1});
  setenv("HECKE_ATLAS_THREADS", "4", 1);
  run({"verify", "--suite", "thm11", "--max-rank", "7", "--report", path4});
  unsetenv("HECKE_ATLAS_THREADS");
  std::ifstream a(path1), b(path4);
  std::stringstream sa, sb;
  sa << a.rdbuf();
  sb << b.rdbuf();
  CHECK(sa.str() == sb.str());
  CHECK_FALSE(sa.str().empty());
}
