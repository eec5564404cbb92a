#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "mvcount/cli.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = mvcount::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json record(const Run& r) {
  REQUIRE(r.code == 0);
  return json::parse(r.out);
}

}  // namespace

TEST_CASE("e prints an exact rational") {
  auto j = record(run({"e", "--D", "5", "--k", "1"}));
  CHECK(j["command"] == "e");
  CHECK(j["result"] == "2");
  CHECK(j["inputs"]["D"] == 5);
  CHECK(j.contains("elapsed_ms"));
  CHECK(record(run({"e", "--D", "1", "--k", "6"}))["result"] == "-1/12");
  CHECK(record(run({"--float", "e", "--D", "1", "--k", "6"}))["result"].get<double>() ==
        doctest::Approx(-1.0 / 12));
}

TEST_CASE("global flags may follow the subcommand") {
  auto j = record(run({"e", "--D", "1", "--k", "6", "--float"}));
  CHECK(j["result"].is_number());
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"e", "--D", "7"}).code == 2);
  CHECK(run({"e"}).code == 2);
  CHECK(run({"chi", "--family", "G", "--D", "8"}).code == 2);
  CHECK(run({"volume", "--locus", "h2", "--dmax", "5"}).code == 2);
  CHECK(run({"verify", "--suite", "nothing"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("proto and qexp series") {
  auto j = record(run({"proto", "--D", "8", "--k", "1"}));
  CHECK(j["result"]["count"] == 4);
  auto csv = run({"--csv", "qexp", "--k", "1", "--n", "5"});
  REQUIRE(csv.code == 0);
  CHECK(csv.out == "n,coeff\n0,-1/24\n1,-1/12\n2,0\n3,0\n4,11/12\n5,2\n");
}

TEST_CASE("chi records") {
  auto j = record(run({"chi", "--family", "W2", "--D", "9"}));
  CHECK(j["result"]["value"] == "-1/2");
  CHECK(j["result"]["mode"] == "exact");
  j = record(run({"chi", "--family", "G", "--D", "25", "--mode", "leading"}));
  CHECK(j["result"]["value"] == "-13/6");
  CHECK(j["result"]["component"] == 1);
  j = record(run({"chi", "--family", "W4", "--D", "13"}));
  CHECK(j["result"]["empty"] == true);
}

TEST_CASE("counting commands") {
  CHECK(record(run({"cd", "--locus", "h2", "--d", "6"}))["result"] == "45");
  auto j = record(run({"smm", "--locus", "gothic", "--m", "24"}));
  CHECK(j["result"]["contributions"].size() == 2);
  CHECK(j["inputs"]["surrogate"] == "main_term");
  j = record(run({"oracle-h2", "--d", "4"}));
  CHECK(j["result"]["count"] == "9");
  CHECK(j["result"]["agree"] == true);
}

TEST_CASE("ideals and sk") {
  auto j = record(run({"ideals", "--d", "5"}));
  CHECK(j["result"]["class_count"] == 4);
  CHECK(j["result"]["components"][1]["polarization"] == json::array({10, 15}));
  j = record(run({"sk", "--k", "1", "--D", "3"}));
  CHECK(j["result"]["value"] == 38);
  CHECK(j["result"]["constant"]["coeff"] == "1/360");
}

TEST_CASE("volume record") {
  auto j = record(run({"volume", "--locus", "gothic", "--dmax", "200", "--mode", "direct"}));
  CHECK(j["result"]["exact_target"]["coeff"] == "13/31104");
  CHECK(j["result"]["exact_target"]["pi_power"] == 4);
  CHECK(j["result"]["checkpoints"].size() == 4);
  CHECK(j["inputs"]["surrogate"] == "main_term");
  j = record(run({"volume", "--locus", "p3", "--dmax", "100", "--mode", "closed"}));
  CHECK(j["result"]["quadratic_convention"]["coeff"] == "5/9");
  auto csv = run({"--csv", "volume", "--locus", "h2", "--dmax", "100"});
  REQUIRE(csv.code == 0);
  CHECK(csv.out.rfind("D,value,sum\n12,", 0) == 0);
}

TEST_CASE("output is deterministic apart from timing") {
  auto a = record(run({"--threads", "1", "smm", "--locus", "p3", "--m", "30"}));
  auto b = record(run({"--threads", "3", "smm", "--locus", "p3", "--m", "30"}));
  a.erase("elapsed_ms");
  b.erase("elapsed_ms");
  CHECK(a == b);
}

TEST_CASE("out writes to a file") {
  const std::string path = "mvcount_cli_test_out.json";
  auto r = run({"--out", path, "e", "--D", "5"});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  CHECK(json::parse(f)["result"] == "2");
  std::remove(path.c_str());
}

TEST_CASE("verify reports each check") {
  auto r = run({"verify", "--suite", "ideals"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["result"]["passed"] == true);
  CHECK(j["result"]["checks"].size() == 6);
  CHECK(r.err.find("[pass]") != std::string::npos);
}
