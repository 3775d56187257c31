#include <doctest.h>

#include <cmath>
#include <random>

#include "hsc/errors.hpp"
#include "hsc/functions.hpp"

using namespace hsc::numeric;

TEST_CASE("registry parsing") {
  CHECK(make_function("const:2")(7.0) == 2.0);
  CHECK(make_function("const:-1.5")(0.3) == -1.5);
  CHECK(make_function("id")(3.25) == 3.25);
  CHECK(make_function("pow:2")(3.0) == doctest::Approx(9.0));
  CHECK(make_function("pow:0.5")(4.0) == doctest::Approx(2.0));
  CHECK(make_function("inv")(4.0) == 0.25);
  CHECK(make_function("neg")(2.0) == -2.0);
  CHECK(make_function("inv").domain_lo > 0.0);
  CHECK(make_function("pow:3").id == "pow:3");

  for (const char* bad : {"", "sin", "pow:", "pow:-1", "pow:0", "pow:2x", "const:",
                          "const:abc", "pow:nan", "ID"}) {
    INFO(bad);
    CHECK_THROWS_AS(make_function(bad), hsc::UsageError);
  }
  CHECK(registry_ids().size() == 6);
  for (const auto& id : registry_ids()) CHECK_NOTHROW(make_function(id));
}

TEST_CASE("interval") {
  CHECK_THROWS_AS(Interval(0.0, 1.0), hsc::DomainError);
  CHECK_THROWS_AS(Interval(-1.0, 1.0), hsc::DomainError);
  CHECK_THROWS_AS(Interval(2.0, 2.0), hsc::DomainError);
  CHECK_THROWS_AS(Interval(3.0, 2.0), hsc::DomainError);
  CHECK_THROWS_AS(Interval(1.0, INFINITY), hsc::DomainError);

  const Interval iv(1.0, 2.0);
  CHECK(iv.length() == 1.0);
  CHECK(iv.contains(1.0));
  CHECK(!iv.contains(2.5));
  const auto g = iv.grid(9);
  REQUIRE(g.size() == 9);
  CHECK(g.front() == 1.0);
  CHECK(g.back() == 2.0);
  CHECK(g[4] == 1.5);
  CHECK(iv.grid(1) == std::vector<double>{1.5});
  CHECK_THROWS_AS(iv.grid(0), hsc::UsageError);
}

TEST_CASE("weighted mean reference values") {
  // id: ab ln(b/a)/(b-a); on [1,2] that is 2 ln 2
  CHECK(weighted_mean(make_function("id"), Interval(1.0, 2.0), 1e-13) ==
        doctest::Approx(1.38629436111989061883).epsilon(1e-13));
  // inv: (a+b)/(2ab)
  CHECK(weighted_mean(make_function("inv"), Interval(0.5, 3.0), 1e-13) ==
        doctest::Approx(3.5 / 3.0).epsilon(1e-13));
  // pow:2: ab
  CHECK(weighted_mean(make_function("pow:2"), Interval(0.5, 3.0), 1e-13) ==
        doctest::Approx(1.5).epsilon(1e-13));
  // tiny a stays well conditioned
  CHECK(weighted_mean(make_function("pow:2"), Interval(1e-6, 1.0), 1e-13) ==
        doctest::Approx(1e-6).epsilon(1e-10));
}

TEST_CASE("arithmetic mean") {
  CHECK(arithmetic_mean(make_function("id"), 1.0, 2.0) == doctest::Approx(1.5));
  CHECK(arithmetic_mean(make_function("pow:0.5"), 0.0, 1.0, 1e-12) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-11));
  CHECK_THROWS_AS(arithmetic_mean(make_function("id"), 2.0, 1.0), hsc::DomainError);
  CHECK_THROWS_AS(arithmetic_mean(make_function("inv"), 0.0, 1.0), hsc::DomainError);
}

TEST_CASE("derivatives") {
  CHECK(derivative(make_function("pow:2"), 3.0) == doctest::Approx(6.0));
  CHECK(derivative(make_function("inv"), 2.0) == doctest::Approx(-0.25));
  CHECK_THROWS_AS(derivative(make_function("inv"), 0.0), hsc::DomainError);

  FunctionSpec cube{"cube", [](double u) { return u * u * u; }, std::nullopt, 0.0, 10.0};
  CHECK(derivative(cube, 2.0) == doctest::Approx(12.0).epsilon(1e-9));
  CHECK_THROWS_AS(derivative(cube, 0.0), hsc::DomainError);
  CHECK_THROWS_AS(derivative(cube, 11.0), hsc::DomainError);
}

TEST_CASE("property: analytic derivative matches central difference") {
  std::mt19937_64 gen(101);
  std::uniform_real_distribution<double> u(0.2, 5.0);
  for (const auto& id : registry_ids()) {
    auto f = make_function(id);
    auto fd = f;
    fd.deriv.reset();
    for (int i = 0; i < 25; ++i) {
      const double x = u(gen);
      const double d = derivative(f, x);
      INFO(id << " at " << x);
      CHECK(std::abs(d - derivative(fd, x)) <= 1e-6 * (1.0 + std::abs(d)));
    }
  }
}

TEST_CASE("property: weighted mean of a constant is the constant") {
  std::mt19937_64 gen(55);
  std::uniform_real_distribution<double> u(0.01, 10.0);
  const auto f = make_function("const:3.5");
  for (int i = 0; i < 50; ++i) {
    const double a = u(gen);
    const double b = a + u(gen);
    CHECK(std::abs(weighted_mean(f, Interval(a, b)) - 3.5) <= 1e-12);
  }
}

TEST_CASE("property: weighted mean lies between min and max of f") {
  std::mt19937_64 gen(56);
  std::uniform_real_distribution<double> u(0.05, 4.0);
  for (const auto& id : registry_ids()) {
    const auto f = make_function(id);
    for (int i = 0; i < 20; ++i) {
      const double a = u(gen);
      const double b = a + u(gen);
      const double m = weighted_mean(f, Interval(a, b));
      const double lo = std::min(f(a), f(b));
      const double hi = std::max(f(a), f(b));
      CHECK(m >= lo - 1e-12);
      CHECK(m <= hi + 1e-12);
    }
  }
}
