#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "hsc/errors.hpp"
#include "hsc/quadrature.hpp"

using hsc::numeric::integrate;
using hsc::numeric::QuadOptions;

TEST_CASE("polynomials and smooth integrands") {
  CHECK(integrate([](double x) { return x * x; }, 0.0, 3.0).value ==
        doctest::Approx(9.0).epsilon(1e-14));
  CHECK(integrate([](double x) { return std::exp(x); }, 0.0, 1.0, 1e-13).value ==
        doctest::Approx(std::expm1(1.0)).epsilon(1e-13));
  CHECK(integrate([](double x) { return 1.0 / x; }, 1.0, 2.0, 1e-13).value ==
        doctest::Approx(std::log(2.0)).epsilon(1e-13));
}

TEST_CASE("endpoint singularities") {
  // int_0^1 t^0.25 = 0.8, int_0^1 ln t = -1, int_0^1 t^-0.5 = 2
  const auto r1 = integrate([](double t) { return std::pow(t, 0.25); }, 0.0, 1.0, 1e-12);
  CHECK(std::abs(r1.value - 0.8) <= 1e-11);
  CHECK(r1.err_est >= 0.0);
  CHECK(r1.evals > 15);
  const auto r2 = integrate([](double t) { return std::log(t); }, 0.0, 1.0, 1e-10);
  CHECK(std::abs(r2.value + 1.0) <= 1e-9);
  const auto r3 = integrate([](double t) { return 1.0 / std::sqrt(t); }, 0.0, 1.0, 1e-6);
  CHECK(std::abs(r3.value - 2.0) <= 1e-5);

  // t^-0.5 at 1e-12 needs intervals narrower than 2^-50.
  try {
    integrate([](double t) { return 1.0 / std::sqrt(t); }, 0.0, 1.0, 1e-12);
    FAIL("expected NumericError");
  } catch (const hsc::NumericError& e) {
    CHECK(std::abs(e.partial() - 2.0) <= 1e-6);
  }
}

TEST_CASE("domain and budget errors") {
  auto one = [](double) { return 1.0; };
  CHECK_THROWS_AS(integrate(one, 1.0, 1.0), hsc::DomainError);
  CHECK_THROWS_AS(integrate(one, 2.0, 1.0), hsc::DomainError);
  CHECK_THROWS_AS(integrate([](double x) { return 1.0 / (x - 0.5); }, 0.0, 0.5),
                  hsc::DomainError);
  CHECK_THROWS_AS(
      integrate([](double) { return std::numeric_limits<double>::quiet_NaN(); }, 0.0, 1.0),
      hsc::DomainError);

  try {
    integrate([](double x) { return std::sin(1.0 / x); }, 1e-9, 1.0, 1e-30);
    FAIL("expected NumericError");
  } catch (const hsc::NumericError& e) {
    CHECK(std::isfinite(e.partial()));
    CHECK(e.err_est() >= 0.0);
  }

  QuadOptions tight;
  tight.abs_tol = 1e-14;
  tight.rel_tol = 1e-14;
  tight.max_intervals = 4;
  CHECK_THROWS_AS(integrate([](double x) { return std::sin(1.0 / x); }, 1e-3, 1.0, tight),
                  hsc::NumericError);
}

TEST_CASE("bit-reproducible") {
  auto f = [](double x) { return std::pow(x, 0.3) * std::cos(5 * x); };
  const auto r1 = integrate(f, 0.0, 2.0, 1e-12);
  const auto r2 = integrate(f, 0.0, 2.0, 1e-12);
  CHECK(r1.value == r2.value);
  CHECK(r1.err_est == r2.err_est);
  CHECK(r1.evals == r2.evals);
}

TEST_CASE("property: additivity over a split point") {
  std::mt19937_64 gen(20261016);
  std::uniform_real_distribution<double> u(0.1, 5.0);
  for (int i = 0; i < 50; ++i) {
    double lo = u(gen);
    double hi = lo + u(gen);
    const double mid = lo + (hi - lo) * 0.37;
    const double k = u(gen);
    auto f = [k](double x) { return std::exp(-k * x) + std::sqrt(x); };
    const double whole = integrate(f, lo, hi, 1e-13).value;
    const double parts = integrate(f, lo, mid, 1e-13).value + integrate(f, mid, hi, 1e-13).value;
    CHECK(std::abs(whole - parts) <= 1e-11 * (1.0 + std::abs(whole)));
  }
}
