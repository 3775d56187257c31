#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hsc/cli.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::initializer_list<const char*> args) {
  std::vector<const char*> argv{"hsconvex"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out, err;
  const int code = hsc::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("lambda command") {
  auto r = run({"lambda", "--kind", "1", "--theta", "1", "--x", "2", "--s", "1", "--vartheta",
                "1", "--rho", "1", "--check"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["value"].get<double>() == doctest::Approx(0.227411277760218762).epsilon(1e-13));
  CHECK(j["discrepancy"].get<double>() <= 1e-10);

  r = run({"lambda", "--kind", "5", "--theta", "1", "--x", "1"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["value"] == 0.5);

  CHECK(run({"lambda", "--kind", "1", "--theta", "2", "--x", "1"}).code == 2);
  CHECK(run({"lambda", "--kind", "6", "--theta", "1", "--x", "2"}).code == 2);
  CHECK(run({"lambda", "--theta", "1"}).code == 2);
}

TEST_CASE("hh command") {
  const auto r = run({"hh", "--fn", "pow:0.5", "--a", "0.25", "--b", "1", "--s", "0.5"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["left"].get<double>() == doctest::Approx(0.447213595499957939));
  CHECK(j["middle"].get<double>() == doctest::Approx(2.0 / 3.0));
  CHECK(j["right"] == 1.0);
  CHECK(run({"hh", "--fn", "pow:0.5", "--a", "0", "--b", "1", "--s", "0.5"}).code == 2);
  CHECK(run({"hh", "--fn", "id", "--a", "1", "--b", "2", "--s", "0"}).code == 2);
  CHECK(run({"hh", "--fn", "sin", "--a", "1", "--b", "2"}).code == 2);
}

TEST_CASE("ostrowski command") {
  auto r = run({"ostrowski", "--theorem", "T2_3", "--fn", "id", "--a", "1", "--b", "2", "--x",
                "1.5", "--s", "1", "--q", "1"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["rhs"].get<double>() == doctest::Approx(0.264433928687233091).epsilon(1e-12));
  CHECK(j["lhs"].get<double>() == doctest::Approx(0.113705638880109381).epsilon(1e-10));

  r = run({"ostrowski", "--theorem", "classic", "--fn", "id", "--a", "1", "--b", "2", "--x",
           "1.5", "--M", "1"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["rhs"] == 0.25);

  CHECK(run({"ostrowski", "--theorem", "classic", "--fn", "id", "--a", "1", "--b", "2"}).code ==
        2);
  CHECK(run({"ostrowski", "--theorem", "T2_3", "--fn", "id", "--a", "1", "--b", "2", "--x", "3",
             "--q", "1"})
            .code == 2);
  CHECK(run({"ostrowski", "--theorem", "T2_6", "--fn", "id", "--a", "1", "--b", "2", "--x",
             "1.5", "--p", "2", "--q", "3"})
            .code == 2);
}

TEST_CASE("verify command exit codes") {
  auto r = run({"verify", "--theorem", "T2_2", "--fn", "pow:0.5", "--a", "0.25", "--b", "1",
                "--s", "0.5"});
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["results"].size() == 2);

  r = run({"verify", "--theorem", "T2_2", "--fn", "neg", "--a", "1", "--b", "2", "--s", "1"});
  CHECK(r.code == 1);
  j = json::parse(r.out);
  CHECK(j["hypothesis_ok"] == false);
  CHECK(j["results"].empty());

  r = run({"verify", "--theorem", "T2_3", "--fn", "pow:0.5", "--a", "1", "--b", "2", "--s", "1",
           "--q", "1"});
  CHECK(r.code == 1);
  CHECK(json::parse(r.out)["hypothesis_ok"] == false);

  CHECK(run({"verify", "--theorem", "T9_9", "--fn", "id", "--a", "1", "--b", "2"}).code == 2);
  CHECK(run({"verify", "--theorem", "T2_3", "--fn", "id", "--a", "2", "--b", "1", "--q", "1"})
            .code == 2);
  CHECK(run({"verify", "--theorem", "T2_3", "--fn", "id", "--a", "1", "--b", "2", "--q", "0.5"})
            .code == 2);
  CHECK(run({"verify", "--bogus"}).code == 2);
}

TEST_CASE("verify csv and file output") {
  const auto r = run({"verify", "--theorem", "T2_3", "--fn", "id", "--a", "1", "--b", "2", "--q",
                      "1", "--grid", "3", "--format", "csv"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "theorem,x,a,b,s,q,p,M,lhs,rhs,slack,hypothesis_ok");
  int rows = 0;
  while (std::getline(lines, line)) {
    CHECK(line.rfind("T2_3,", 0) == 0);
    ++rows;
  }
  CHECK(rows == 3);

  const auto path = std::filesystem::temp_directory_path() / "hsconvex_cli_test.json";
  const auto f = run({"verify", "--theorem", "T2_5", "--fn", "inv", "--a", "0.5", "--b", "3",
                      "--q", "2", "--out", path.c_str()});
  CHECK(f.code == 0);
  CHECK(f.out.empty());
  std::ifstream in(path);
  const auto j = json::parse(in);
  CHECK(j["theorem"] == "T2_5");
  CHECK(j["results"].size() == 9);
  std::filesystem::remove(path);
}

TEST_CASE("output is byte-identical across runs") {
  auto args = {"verify", "--theorem", "T2_7", "--fn", "pow:2", "--a", "0.5", "--b", "3", "--s",
               "0.5", "--q", "2", "--seed", "99"};
  const auto r1 = run(args);
  const auto r2 = run(args);
  CHECK(r1.code == 0);
  CHECK(r1.out == r2.out);
  CHECK(json::parse(r1.out)["hypothesis"]["seed"] == 99);
}

TEST_CASE("selftest command") {
  auto r = run({"selftest"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);

  r = run({"selftest", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["suites"].size() == 9);

  CHECK(run({"selftest", "--inject-printed-kind2"}).code == 1);
  CHECK(run({"selftest", "--tol", "1e-30"}).code == 1);
}

TEST_CASE("help and bare invocation") {
  CHECK(run({"--help"}).code == 0);
  CHECK(run({}).code == 2);
}
