#include <doctest.h>

#include <cmath>
#include <random>

#include "hsc/errors.hpp"
#include "hsc/selftest.hpp"
#include "hsc/verify.hpp"

using namespace hsc::verify;
using hsc::bounds::ConjugatePair;
using hsc::bounds::DerivBound;
using hsc::bounds::PowerParam;
using hsc::bounds::Theorem;
using hsc::convexity::SExponent;
using hsc::numeric::Interval;
using hsc::numeric::make_function;

namespace {
VerifyRequest request(Theorem th, const char* fn, double a, double b, double s) {
  VerifyRequest r;
  r.theorem = th;
  r.f = make_function(fn);
  r.iv = Interval(a, b);
  r.s = SExponent(s);
  return r;
}
}  // namespace

TEST_CASE("identity sides for f(x) = x on [1, 2]") {
  const auto sides = identity_sides(make_function("id"), 1.5, Interval(1.0, 2.0));
  CHECK(sides.lhs == doctest::Approx(1.5 - 1.38629436111989061883).epsilon(1e-12));
  CHECK(std::abs(sides.lhs - sides.rhs) <= 1e-11);
  CHECK_THROWS_AS(identity_sides(make_function("id"), 3.0, Interval(1.0, 2.0)),
                  hsc::DomainError);
}

TEST_CASE("property: identity residual is small on random anchors") {
  std::mt19937_64 gen(61);
  std::uniform_real_distribution<double> u(0.2, 3.0);
  std::uniform_real_distribution<double> ut(0.0, 1.0);
  for (const auto& id : hsc::numeric::registry_ids()) {
    const auto f = make_function(id);
    for (int i = 0; i < 8; ++i) {
      const double a = u(gen);
      const Interval iv(a, a + u(gen));
      const double x = iv.a() + ut(gen) * iv.length();
      INFO(id << " x=" << x);
      CHECK(lemma_residual(f, x, iv) <= 1e-9 * (1.0 + std::abs(f(x))));
    }
  }
}

TEST_CASE("hermite-hadamard sweep") {
  const auto rep = verify_theorem(request(Theorem::hermite_hadamard, "pow:0.5", 0.25, 1.0, 0.5));
  CHECK(rep.hypothesis_ok);
  CHECK(rep.pass);
  REQUIRE(rep.results.size() == 2);
  CHECK(rep.results[0].theorem == "T2_2:left");
  CHECK(rep.results[1].theorem == "T2_2:right");
  CHECK(rep.results[0].x == doctest::Approx(0.4));
  CHECK(rep.results[0].slack == doctest::Approx(2.0 / 3.0 - 0.447213595499957939));
  CHECK(rep.results[1].slack == doctest::Approx(1.0 / 3.0));
  REQUIRE(rep.min_slack);
  CHECK(*rep.min_slack == rep.results[0].slack);
}

TEST_CASE("negated identity fails the convexity hypothesis") {
  const auto rep = verify_theorem(request(Theorem::hermite_hadamard, "neg", 1.0, 2.0, 1.0));
  CHECK(!rep.hypothesis_ok);
  CHECK(!rep.pass);
  CHECK(rep.results.empty());
  CHECK(!rep.min_slack);
  CHECK(rep.gate.max_violation > 0.0);
}

TEST_CASE("Ostrowski gate uses |f'|^q") {
  // |f'| = 1 for the negated identity, so its gate passes.
  auto neg = request(Theorem::power_mean, "neg", 1.0, 2.0, 1.0);
  neg.exponents = PowerParam(1.0);
  const auto ok = verify_theorem(neg);
  CHECK(ok.hypothesis_ok);
  CHECK(ok.pass);
  CHECK(ok.results.size() == 9);

  // |f'| = u^{-1/2}/2 is not harmonically convex.
  auto root = request(Theorem::power_mean, "pow:0.5", 1.0, 2.0, 1.0);
  root.exponents = PowerParam(1.0);
  const auto bad = verify_theorem(root);
  CHECK(!bad.hypothesis_ok);
  CHECK(!bad.pass);
  CHECK(bad.results.empty());
}

TEST_CASE("Ostrowski sweep results") {
  auto req = request(Theorem::holder_kernel, "inv", 0.5, 3.0, 0.5);
  req.exponents = ConjugatePair(2.0, 2.0);
  const auto rep = verify_theorem(req);
  CHECK(rep.hypothesis_ok);
  CHECK(rep.pass);
  REQUIRE(rep.results.size() == 9);
  for (std::size_t i = 1; i < rep.results.size(); ++i) {
    CHECK(rep.results[i - 1].x < rep.results[i].x);
  }
  CHECK(rep.results.front().x == 0.5);
  CHECK(rep.results.back().x == 3.0);
  CHECK(*rep.grid.p == 2.0);
  CHECK(*rep.grid.q == 2.0);
  CHECK(*rep.min_slack >= -kSlackTolerance);
}

TEST_CASE("corollary mode") {
  auto req = request(Theorem::power_mean_linear, "pow:2", 1.0, 2.0, 1.0);
  req.exponents = PowerParam(2.0);
  req.M = DerivBound(4.1);
  const auto rep = verify_theorem(req);
  CHECK(rep.hypothesis_ok);
  CHECK(rep.pass);
  for (const auto& r : rep.results) CHECK(r.M == 4.1);

  req.M = DerivBound(3.0);  // below max |f'| = 4
  const auto low = verify_theorem(req);
  CHECK(!low.hypothesis_ok);
  CHECK(!low.pass);
}

TEST_CASE("request validation") {
  auto req = request(Theorem::power_mean, "id", 1.0, 2.0, 1.0);
  CHECK_THROWS_AS(verify_theorem(req), hsc::UsageError);
  req.exponents = PowerParam(1.0);
  req.x_grid = 0;
  CHECK_THROWS_AS(verify_theorem(req), hsc::UsageError);
  auto hh = request(Theorem::hermite_hadamard, "id", 1.0, 2.0, 1.0);
  hh.M = DerivBound(1.0);
  CHECK_THROWS_AS(verify_theorem(hh), hsc::UsageError);
}

TEST_CASE("sweeps are deterministic") {
  auto req = request(Theorem::power_mean_kernel, "pow:2", 0.5, 3.0, 0.5);
  req.exponents = PowerParam(2.0);
  req.gate_grid.random_samples = 256;
  req.gate_grid.seed = 1234;
  const auto r1 = verify_theorem(req);
  const auto r2 = verify_theorem(req);
  REQUIRE(r1.results.size() == r2.results.size());
  for (std::size_t i = 0; i < r1.results.size(); ++i) {
    CHECK(r1.results[i].rhs == r2.results[i].rhs);
    CHECK(r1.results[i].lhs == r2.results[i].lhs);
  }
  CHECK(r1.gate.max_violation == r2.gate.max_violation);
  CHECK(r1.gate.samples == 32 * 32 * 17 + 256);
}

TEST_CASE("closed-form lambda agrees with quadrature on the default grid") {
  const auto grid = default_lambda_grid();
  CHECK(grid.family.size() >= 240);
  CHECK(grid.kernel.size() >= 16);
  const auto c = lambda_consistency(grid);
  CHECK(c.max_rel_family <= 1e-8);
  CHECK(c.max_rel_kernel <= 1e-10);
  CHECK(c.family_points == grid.family.size());
  CHECK(c.kernel_points == grid.kernel.size());

  hsc::bounds::LambdaOptions printed;
  printed.printed_kind2 = true;
  CHECK(lambda_consistency(grid, printed).max_rel_family > 1e-3);
}

TEST_CASE("battery passes and flags injected faults") {
  const auto rows = run_selftest();
  CHECK(rows.size() == 9);
  for (const auto& r : rows) {
    INFO(r.name << ": " << r.detail);
    CHECK(r.pass);
  }

  SelftestOptions bad;
  bad.printed_kind2 = true;
  const auto broken = run_selftest(bad);
  CHECK(!broken.front().pass);
}
