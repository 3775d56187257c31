#include <doctest.h>

#include <cmath>
#include <limits>

#include "hsc/report.hpp"

using namespace hsc::report;
using nlohmann::json;

TEST_CASE("double formatting") {
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(-0.0) == "0");
  CHECK(format_double(1e-300) == "1e-300");
  CHECK(format_double(-2.5e-8) == "-2.4999999999999999e-08");
  CHECK(format_double(std::numeric_limits<double>::quiet_NaN()) == "null");
  CHECK(format_double(-std::numeric_limits<double>::infinity()) == "null");
  for (double v : {0.1, 1.0 / 3.0, 2.0 * std::log(2.0), 1e-17, 6.02e23}) {
    CHECK(std::stod(format_double(v)) == v);
  }
}

TEST_CASE("dump layout") {
  json doc = {{"b", 0.5}, {"a", {1, 2}}, {"c", json::object()}, {"d", nullptr},
              {"e", "txt"}, {"f", true}};
  CHECK(dump(doc) ==
        "{\n"
        "  \"a\": [\n"
        "    1,\n"
        "    2\n"
        "  ],\n"
        "  \"b\": 0.5,\n"
        "  \"c\": {},\n"
        "  \"d\": null,\n"
        "  \"e\": \"txt\",\n"
        "  \"f\": true\n"
        "}\n");
  CHECK(dump(json::array()) == "[]\n");
  CHECK(json::parse(dump(doc)) == doc);
}

TEST_CASE("bound result rows") {
  hsc::bounds::BoundResult r;
  r.theorem = "T2_6";
  r.x = 1.5;
  r.a = 1.0;
  r.b = 2.0;
  r.s = 0.5;
  r.q = 2.0;
  r.p = 2.0;
  r.lhs = 0.25;
  r.rhs = 0.75;
  r.slack = 0.5;
  CHECK(csv_header() == "theorem,x,a,b,s,q,p,M,lhs,rhs,slack,hypothesis_ok\n");
  CHECK(csv_row(r) == "T2_6,1.5,1,2,0.5,2,2,,0.25,0.75,0.5,true\n");

  const auto j = to_json(r);
  CHECK(j["M"].is_null());
  CHECK(j["q"] == 2.0);
  CHECK(j["theorem"] == "T2_6");
  CHECK(j["hypothesis_ok"] == true);
}

TEST_CASE("convexity report") {
  hsc::convexity::ConvexityReport r;
  r.max_violation = 1.0 / 6.0;
  r.witness = {1.0, 2.0, 0.5};
  r.samples = 27;
  const auto j = to_json(r);
  CHECK(j["mode"] == "harmonically_s_convex");
  CHECK(j["witness"]["t"] == 0.5);
  CHECK(j["seed"].is_null());
  CHECK(dump(j).find("0.16666666666666666") != std::string::npos);
}
