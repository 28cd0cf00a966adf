#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "emcg/cli.hpp"
#include "json.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = emcg::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("eval") {
    auto r = run({"eval", "--n", "6", "t a0 t", "a0"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("equal\n", 0) == 0);
    CHECK(r.out.find("perm") != std::string::npos);
    CHECK(r.out.find("psi'") != std::string::npos);
    r = run({"eval", "--n", "6", "s1", "s2"});
    CHECK(r.code == 1);
    CHECK(r.out.rfind("not equal\n", 0) == 0);
    CHECK(run({"eval", "--n", "6", "a2", "a0 S5 s4"}).code == 0);
    CHECK(run({"eval", "--n", "6", "s9", "s1"}).code == emcg::kExitParse);
  }

  TEST_CASE("order") {
    CHECK(run({"order", "--n", "6", "t a0"}).out == "6\n");
    CHECK(run({"order", "--n", "5", "t a0"}).out == "10\n");
    CHECK(run({"order", "--n", "6", "s1"}).out == "exceeds cap 24\n");
    CHECK(run({"order", "--n", "6", "--order-cap", "3", "a0"}).out == "exceeds cap 3\n");
    CHECK(run({"order", "--n", "6", "((("}).code == emcg::kExitParse);
  }

  TEST_CASE("enumerate") {
    auto r = run({"enumerate", "--n", "6", "--flavor", "extended", "--subgroup", "a,b",
                  "--max-cosets", "100000"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("index 1\n", 0) == 0);
    CHECK(r.out.find("max-alive") != std::string::npos);
    r = run({"enumerate", "--n", "6", "--subgroup", "s1", "--max-cosets", "20"});
    CHECK(r.code == 2);
    CHECK(r.out.rfind("OVERFLOW", 0) == 0);
    CHECK(run({"enumerate", "--n", "3", "--subgroup", ""}).out.rfind("index 12\n", 0) == 0);
    CHECK(run({"enumerate", "--n", "3", "--flavor", "oriented", "--subgroup", "t"}).code ==
          emcg::kExitUsage);
    CHECK(run({"enumerate", "--n", "3", "--flavor", "mirror"}).code == emcg::kExitUsage);
  }

  TEST_CASE("verify") {
    CHECK(run({"verify", "--n", "7", "--suite", "lemma-y"}).code == emcg::kExitUsage);
    CHECK(run({"verify", "--suite", "nonsense"}).code == emcg::kExitUsage);
    CHECK(run({"verify", "--n", "2", "--suite", "presentation"}).code == emcg::kExitUsage);
    const auto n4 = run({"verify", "--suite", "n4"});
    CHECK(n4.code == 0);
    // n is ignored by n-independent suites
    CHECK(run({"verify", "--n", "99", "--suite", "sigma2"}).code == 0);
    CHECK(run({"verify", "--n", "5", "--suite", "odd"}).code == 0);
    CHECK(run({"verify", "--n", "6", "--suite", "lemma-y"}).code == 0);
    // the displayed value of c fails at n = 6
    CHECK(run({"verify", "--n", "6", "--suite", "main", "--max-cosets", "100000"}).code == 1);
  }

  TEST_CASE("verify machine output and atomic file") {
    const auto path = std::filesystem::temp_directory_path() / "emcg_cli_report.json";
    std::filesystem::remove(path);
    const auto r = run({"verify", "--suite", "sigma2", "--machine", "--out", path.string(),
                        "--seed", "3"});
    CHECK(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["version"] == 1);
    bool has_prop = false;
    for (const auto& c : doc["checks"]) has_prop |= c["id"].get<std::string>().find(".prop.") != std::string::npos;
    CHECK(has_prop);
    std::ifstream f(path);
    REQUIRE(f);
    const auto on_disk = nlohmann::json::parse(f);
    CHECK(on_disk["checks"].size() == doc["checks"].size());
    CHECK_FALSE(std::filesystem::exists(path.string() + ".tmp"));
    std::filesystem::remove(path);
  }

  TEST_CASE("usage") {
    CHECK(run({}).code == emcg::kExitUsage);
    CHECK(run({"frobnicate"}).code == emcg::kExitUsage);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"presentation", "--n", "3"}).out.rfind("n=3 flavor=extended\n", 0) == 0);
  }
}
