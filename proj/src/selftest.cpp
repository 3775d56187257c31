#include "hsc/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <set>
#include <sstream>

#include "hsc/bounds.hpp"
#include "hsc/convexity.hpp"
#include "hsc/specfn.hpp"

namespace hsc::verify {
namespace {

using bounds::Theorem;
using convexity::ConvexityMode;
using convexity::SExponent;
using numeric::Interval;

// Each suite fills metric/cases/detail and decides pass; exceptions turn
// into a failing row.
SuiteRow run_suite(const std::string& name, double threshold,
                   const std::function<void(SuiteRow&)>& body) {
  SuiteRow row;
  row.name = name;
  row.threshold = threshold;
  try {
    body(row);
  } catch (const std::exception& e) {
    row.pass = false;
    row.detail = std::string("error: ") + e.what();
  }
  return row;
}

double worst(double metric, double v) {
  return std::isnan(v) || std::isnan(metric) ? std::numeric_limits<double>::quiet_NaN()
                                             : std::max(metric, v);
}

struct OstrowskiConfig {
  Theorem th;
  std::string fn;
  double s;
  bounds::Exponents exps;
  double a;
  double b;
};

std::vector<OstrowskiConfig> ostrowski_matrix() {
  std::vector<OstrowskiConfig> out;
  const std::pair<double, double> intervals[] = {{1.0, 2.0}, {0.5, 3.0}};
  for (auto th : {Theorem::power_mean, Theorem::power_mean_linear,
                  Theorem::power_mean_kernel, Theorem::holder,
                  Theorem::holder_kernel}) {
    for (const auto& fn : numeric::registry_ids()) {
      for (double s : {0.5, 1.0}) {
        for (const auto& [a, b] : intervals) {
          if (th == Theorem::holder || th == Theorem::holder_kernel) {
            out.push_back({th, fn, s, bounds::ConjugatePair(2.0, 2.0), a, b});
          } else {
            for (double q : {1.0, 2.0}) {
              out.push_back({th, fn, s, bounds::PowerParam(q), a, b});
            }
          }
        }
      }
    }
  }
  return out;
}

}  // namespace

std::vector<SuiteRow> run_selftest(const SelftestOptions& opts) {
  std::vector<SuiteRow> rows;
  const double tol = opts.tol;
  bounds::LambdaOptions lopts;
  lopts.printed_kind2 = opts.printed_kind2;

  std::optional<ConsistencyResult> consistency;
  auto consistency_once = [&]() -> const ConsistencyResult& {
    if (!consistency) {
      consistency = lambda_consistency(default_lambda_grid(), lopts, tol);
    }
    return *consistency;
  };

  rows.push_back(run_suite("lambda family closed form", 1e-8, [&](SuiteRow& r) {
    const auto& c = consistency_once();
    r.metric = c.max_rel_family;
    r.cases = c.family_points;
    r.pass = c.max_rel_family <= r.threshold && c.family_points >= 240;
    std::ostringstream os;
    os.precision(17);
    const auto& w = c.worst_family;
    os << "worst kind " << w.kind << " theta=" << w.theta << " x=" << w.x
       << " s=" << w.s << " vartheta=" << w.vartheta << " rho=" << w.rho;
    r.detail = os.str();
  }));

  rows.push_back(run_suite("lambda5 closed form", 1e-10, [&](SuiteRow& r) {
    const auto& c = consistency_once();
    r.metric = c.max_rel_kernel;
    r.cases = c.kernel_points;
    r.pass = c.max_rel_kernel <= r.threshold;
    // The two branches must meet inside the series band.
    double branch_gap = 0.0;
    for (double eps : {1e-6, 1e-5, 1e-4, 1e-3}) {
      for (double sign : {-1.0, 1.0}) {
        const double x = 1.5;
        const double theta = x * (1.0 - sign * eps);
        const double closed = bounds::lambda5_closed(theta, x);
        const double series = bounds::lambda5_series(theta, x);
        branch_gap = worst(branch_gap, std::abs(closed - series) / series);
      }
    }
    r.pass = r.pass && branch_gap <= 1e-9;
    std::ostringstream os;
    os.precision(3);
    os << "branch gap " << branch_gap;
    r.detail = os.str();
  }));

  rows.push_back(run_suite("integral identity", 1e-7, [&](SuiteRow& r) {
    const std::pair<double, double> intervals[] = {
        {1.0, 2.0}, {0.5, 3.0}, {2.0, 2.5}};
    for (const char* id : {"const:2", "id", "pow:2", "pow:0.5", "inv"}) {
      const auto f = numeric::make_function(id);
      for (const auto& [a, b] : intervals) {
        const Interval iv(a, b);
        for (double x : iv.grid(9)) {
          const double res = lemma_residual(f, x, iv, tol);
          r.metric = worst(r.metric, res / (1.0 + std::abs(f(x))));
          ++r.cases;
        }
      }
    }
    r.pass = r.metric <= r.threshold && r.cases == 135;
  }));

  rows.push_back(run_suite("hermite-hadamard chain", 1e-12, [&](SuiteRow& r) {
    const std::pair<double, double> intervals[] = {{0.25, 1.0}, {0.1, 0.9}};
    bool gates = true;
    for (double s : {0.25, 0.5, 0.75, 1.0}) {
      std::ostringstream id;
      id << "pow:" << s;
      for (const auto& [a, b] : intervals) {
        VerifyRequest req;
        req.theorem = Theorem::hermite_hadamard;
        req.f = numeric::make_function(id.str());
        req.iv = Interval(a, b);
        req.s = SExponent(s);
        req.tol = tol;
        const auto rep = verify_theorem(req);
        gates = gates && rep.hypothesis_ok;
        for (const auto& b : rep.results) {
          r.metric = worst(r.metric, -b.slack);
          ++r.cases;
        }
      }
    }
    // s = 1 on f(x) = x reproduces the harmonically convex chain.
    const auto hh = bounds::hh_harmonic_bounds(numeric::make_function("id"),
                                               Interval(1.0, 2.0),
                                               SExponent(1.0), tol);
    const double middle_err = std::abs(hh.middle - 2.0 * std::log(2.0));
    r.pass = gates && r.metric <= r.threshold && middle_err <= 1e-10 &&
             hh.left <= hh.middle && hh.middle <= hh.right;
    std::ostringstream os;
    os.precision(3);
    os << "middle term error " << middle_err;
    r.detail = os.str();
  }));

  rows.push_back(run_suite("ostrowski-type matrix", kSlackTolerance,
                           [&](SuiteRow& r) {
    std::set<std::pair<std::string, std::string>> gated;
    std::size_t rejected = 0;
    for (const auto& cfg : ostrowski_matrix()) {
      VerifyRequest req;
      req.theorem = cfg.th;
      req.f = numeric::make_function(cfg.fn);
      req.iv = Interval(cfg.a, cfg.b);
      req.s = SExponent(cfg.s);
      req.exponents = cfg.exps;
      req.tol = tol;
      const auto rep = verify_theorem(req);
      if (!rep.hypothesis_ok) {
        ++rejected;
        continue;
      }
      gated.emplace(rep.theorem, cfg.fn);
      r.metric = worst(r.metric, -*rep.min_slack);
      r.cases += rep.results.size();
    }
    r.pass = r.metric <= r.threshold && gated.size() >= 5;
    std::ostringstream os;
    os << gated.size() << " (theorem, f) pairs gated in, " << rejected
       << " configurations rejected by the hypothesis";
    r.detail = os.str();
  }));

  rows.push_back(run_suite("derivative-bound variants", 1e-12,
                           [&](SuiteRow& r) {
    for (const auto& cfg : ostrowski_matrix()) {
      const auto f = numeric::make_function(cfg.fn);
      const Interval iv(cfg.a, cfg.b);
      double max_d = 0.0;
      for (double u : iv.grid(32)) {
        max_d = std::max(max_d, std::abs(numeric::derivative(f, u)));
      }
      const bounds::DerivBound M(max_d + 0.1);
      for (double x : iv.grid(9)) {
        const double plain = bounds::ostrowski_rhs(cfg.th, f, x, iv,
                                                   SExponent(cfg.s), cfg.exps,
                                                   std::nullopt, lopts);
        const double with_m =
            bounds::corollary_rhs(cfg.th, x, iv, cfg.s, cfg.exps, M, lopts);
        r.metric = worst(r.metric, plain - with_m);
        ++r.cases;
      }
    }
    r.pass = r.metric <= r.threshold;
  }));

  rows.push_back(run_suite("classic ostrowski", 1e-14, [&](SuiteRow& r) {
    const auto f = numeric::make_function("id");
    const double a = 1.0;
    const double b = 2.0;
    const double mean = numeric::arithmetic_mean(f, a, b, tol);
    for (double x : Interval(a, b).grid(33)) {
      const double lhs = std::abs(f(x) - mean);
      const double rhs = bounds::classic_ostrowski_rhs(x, a, b,
                                                       bounds::DerivBound(1.0));
      r.metric = worst(r.metric, lhs - rhs);
      ++r.cases;
    }
    r.pass = r.metric <= r.threshold;
  }));

  rows.push_back(run_suite("convexity transfer and am-hm", 0.0,
                           [&](SuiteRow& r) {
    const convexity::GridSpec grid{32, 17, 0, 0};
    const std::pair<double, double> intervals[] = {{0.5, 4.0}, {1.0, 2.0}};
    std::size_t premises = 0;
    std::size_t failures = 0;
    for (const auto& [lo, hi] : intervals) {
      const Interval iv(lo, hi);
      const auto amhm = convexity::check_am_hm(iv, grid);
      r.metric = worst(r.metric, amhm.max_violation);
      ++r.cases;
      for (const auto& id : numeric::registry_ids()) {
        const auto f = numeric::make_function(id);
        for (double s : {0.25, 0.5, 0.75, 1.0}) {
          const SExponent se(s);
          const bool sconv =
              convexity::check_convexity(f, iv, ConvexityMode::s_convex_second_sense,
                                         se, grid)
                  .holds();
          const bool hconv =
              convexity::check_convexity(f, iv, ConvexityMode::harmonically_s_convex,
                                         se, grid)
                  .holds();
          if (sconv && convexity::is_nondecreasing(f, lo, hi, 32)) {
            ++premises;
            if (!hconv) ++failures;
          }
          if (hconv && convexity::is_nonincreasing(f, lo, hi, 32)) {
            ++premises;
            if (!sconv) ++failures;
          }
          ++r.cases;
        }
      }
    }
    // Power functions on (0, 1] with matching exponent.
    for (double s : {0.25, 0.5, 0.75, 1.0}) {
      std::ostringstream id;
      id << "pow:" << s;
      const auto rep = convexity::check_convexity(
          numeric::make_function(id.str()), 1e-6, 1.0,
          ConvexityMode::harmonically_s_convex, SExponent(s), grid);
      if (!rep.holds()) ++failures;
      ++r.cases;
    }
    r.pass = r.metric <= r.threshold && failures == 0 && premises > 0;
    std::ostringstream os;
    os << premises << " implication premises held, " << failures
       << " conclusions failed";
    r.detail = os.str();
  }));

  rows.push_back(run_suite("special functions", 1e-10, [&](SuiteRow& r) {
    for (int i = 1; i <= 9; ++i) {
      const double z = 0.1 * i;
      const double ref = -std::log1p(-z) / z;
      const double got = specfn::hyp2f1(1.0, 1.0, 2.0, z);
      r.metric = worst(r.metric, std::abs(got - ref) / ref);
      ++r.cases;
    }
    double asym = 0.0;
    for (double x = 0.5; x <= 50.0; x += 3.5) {
      for (double y = 0.5; y <= 50.0; y += 4.5) {
        const double bxy = specfn::beta(x, y);
        asym = worst(asym, std::abs(bxy - specfn::beta(y, x)) / bxy);
        ++r.cases;
      }
    }
    r.pass = r.metric <= r.threshold && asym <= 1e-13;
    std::ostringstream os;
    os.precision(3);
    os << "beta asymmetry " << asym;
    r.detail = os.str();
  }));

  return rows;
}

}  // namespace hsc::verify
