#include "hsc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hsc/errors.hpp"

namespace hsc::verify {
namespace {

using bounds::Theorem;

double side_integral(const numeric::FunctionSpec& f, double endpoint, double x,
                     double tol) {
  auto integrand = [&](double t) {
    const double den = t * endpoint + (1.0 - t) * x;
    return t / (den * den) * numeric::derivative(f, endpoint * x / den);
  };
  return numeric::integrate(integrand, 0.0, 1.0, tol).value;
}

numeric::FunctionSpec derivative_power(const numeric::FunctionSpec& f,
                                       double q) {
  numeric::FunctionSpec g;
  g.id = "|" + f.id + "'|^q";
  g.eval = [f, q](double u) {
    return std::pow(std::abs(numeric::derivative(f, u)), q);
  };
  g.domain_lo = f.domain_lo;
  g.domain_hi = f.domain_hi;
  return g;
}

double exponent_q(const bounds::Exponents& e) {
  return std::visit([](const auto& v) { return v.q(); }, e);
}

}  // namespace

IdentitySides identity_sides(const numeric::FunctionSpec& f, double x,
                             const numeric::Interval& iv, double tol) {
  if (!iv.contains(x)) {
    throw DomainError("identity_sides: anchor outside the interval");
  }
  const double a = iv.a();
  const double b = iv.b();
  IdentitySides out{};
  out.lhs = f(x) - numeric::weighted_mean(f, iv, tol);

  double left = 0.0;
  double right = 0.0;
  if (x > a) left = (x - a) * (x - a) * side_integral(f, a, x, tol);
  if (x < b) right = (b - x) * (b - x) * side_integral(f, b, x, tol);
  out.rhs = a * b / (b - a) * (left - right);
  return out;
}

double lemma_residual(const numeric::FunctionSpec& f, double x,
                      const numeric::Interval& iv, double tol) {
  const auto sides = identity_sides(f, x, iv, tol);
  return std::abs(sides.lhs - sides.rhs);
}

VerifyReport verify_theorem(const VerifyRequest& req) {
  if (req.x_grid == 0) throw UsageError("verify_theorem: empty anchor grid");
  const bool ostrowski = bounds::is_ostrowski(req.theorem);
  if (ostrowski && !req.exponents) {
    throw UsageError("verify_theorem: " +
                     std::string(bounds::to_id(req.theorem)) +
                     " needs exponents");
  }
  if (!ostrowski && req.M) {
    throw UsageError("verify_theorem: T2_2 has no derivative-bound variant");
  }

  const double a = req.iv.a();
  const double b = req.iv.b();
  const double s = req.s.value();

  VerifyReport rep;
  rep.theorem = std::string(bounds::to_id(req.theorem));
  rep.grid.fn = req.f.id;
  rep.grid.a = a;
  rep.grid.b = b;
  rep.grid.s = s;
  rep.grid.x_count = ostrowski ? req.x_grid : 1;
  if (req.exponents) {
    rep.grid.q = exponent_q(*req.exponents);
    if (const auto* cp = std::get_if<bounds::ConjugatePair>(&*req.exponents)) {
      rep.grid.p = cp->p();
    }
  }
  if (req.M) rep.grid.M = req.M->value();

  // Hypothesis gate.
  if (ostrowski) {
    const auto g = derivative_power(req.f, *rep.grid.q);
    rep.gate = convexity::check_convexity(
        g, req.iv, convexity::ConvexityMode::harmonically_s_convex, req.s,
        req.gate_grid);
  } else {
    rep.gate = convexity::check_convexity(
        req.f, req.iv, convexity::ConvexityMode::harmonically_s_convex, req.s,
        req.gate_grid);
  }
  rep.hypothesis_ok = rep.gate.holds();
  if (rep.hypothesis_ok && req.M) {
    for (double u : req.iv.grid(req.gate_grid.n_xy)) {
      if (std::abs(numeric::derivative(req.f, u)) >
          req.M->value() + convexity::kViolationTolerance) {
        rep.hypothesis_ok = false;
        break;
      }
    }
  }
  if (!rep.hypothesis_ok) {
    rep.pass = false;
    return rep;
  }

  if (ostrowski) {
    for (double x : req.iv.grid(req.x_grid)) {
      rep.results.push_back(bounds::ostrowski_instance(
          req.theorem, req.f, x, req.iv, req.s, *req.exponents, req.M,
          req.tol));
    }
  } else {
    const auto hh = bounds::hh_harmonic_bounds(req.f, req.iv, req.s, req.tol);
    const double anchor = 2.0 * a * b / (a + b);
    auto row = [&](const char* part, double lhs, double rhs) {
      bounds::BoundResult r;
      r.theorem = rep.theorem + ":" + part;
      r.x = anchor;
      r.a = a;
      r.b = b;
      r.s = s;
      r.lhs = lhs;
      r.rhs = rhs;
      r.slack = rhs - lhs;
      return r;
    };
    rep.results.push_back(row("left", hh.left, hh.middle));
    rep.results.push_back(row("right", hh.middle, hh.right));
  }

  double lowest = std::numeric_limits<double>::infinity();
  for (auto& r : rep.results) {
    r.hypothesis_ok = true;
    lowest = std::min(lowest, r.slack);
  }
  rep.min_slack = lowest;
  rep.pass = lowest >= -kSlackTolerance;
  return rep;
}

double lambda_by_quadrature(const bounds::LambdaArgs& args, double tol) {
  bounds::lambda_z(args);  // validates
  const double theta = args.theta;
  const double x = args.x;
  const double pw = 2.0 * args.vartheta;
  const bool mixed = args.kind == 2 || args.kind == 4;
  const double lead = mixed ? args.rho : args.rho + args.s;
  const double tail = mixed ? args.s : 0.0;
  auto integrand = [=](double t) {
    const double den = t * theta + (1.0 - t) * x;
    return std::pow(t, lead) * std::pow(1.0 - t, tail) / std::pow(den, pw);
  };
  return numeric::integrate(integrand, 0.0, 1.0, tol).value;
}

double lambda5_by_quadrature(double theta, double x, double tol) {
  auto integrand = [=](double t) {
    const double den = t * theta + (1.0 - t) * x;
    return t / (den * den);
  };
  return numeric::integrate(integrand, 0.0, 1.0, tol).value;
}

LambdaGrid default_lambda_grid() {
  LambdaGrid g;
  const std::pair<double, double> left_pts[] = {{1.0, 1.1}, {1.0, 1.5},
                                                {1.0, 1.9}};
  const double s_vals[] = {0.0, 0.25, 0.5, 0.75, 1.0};
  const std::pair<double, double> shapes[] = {
      {1.0, 0.0}, {1.0, 1.0}, {2.0, 2.0}, {1.5, 1.5}};

  for (int kind = 1; kind <= 4; ++kind) {
    for (const auto& [lo, hi] : left_pts) {
      // Right-side kinds take the reversed pair: theta = b > x.
      const double theta = kind <= 2 ? lo : hi;
      const double x = kind <= 2 ? hi : lo;
      for (double s : s_vals) {
        for (const auto& [vartheta, rho] : shapes) {
          g.family.push_back({kind, theta, x, s, vartheta, rho});
        }
      }
    }
  }

  g.kernel = {{1.0, 1.1}, {1.0, 1.5}, {1.0, 1.9}, {1.1, 1.0}, {1.5, 1.0},
              {1.9, 1.0}, {1.0, 2.0}, {2.0, 1.5}, {1.0, 1.0}, {2.0, 2.0}};
  const double x = 1.5;
  for (double eps : {1e-6, 1e-5, 5e-5, 9.9e-5, 1e-4, 1.01e-4, 2e-4, 1e-3}) {
    g.kernel.emplace_back(x * (1.0 - eps), x);
    g.kernel.emplace_back(x * (1.0 + eps), x);
  }
  return g;
}

ConsistencyResult lambda_consistency(const LambdaGrid& grid,
                                     const bounds::LambdaOptions& opts,
                                     double tol) {
  if (grid.family.empty() && grid.kernel.empty()) {
    throw UsageError("lambda_consistency: empty grid");
  }
  ConsistencyResult out;
  for (const auto& args : grid.family) {
    const double closed = bounds::lambda(args, opts);
    const double quad = lambda_by_quadrature(args, tol);
    const double rel = std::abs(closed - quad) / std::abs(closed);
    if (!(rel <= out.max_rel_family) && !std::isnan(out.max_rel_family)) {
      out.max_rel_family = rel;
      out.worst_family = args;
    }
    ++out.family_points;
  }
  for (const auto& [theta, x] : grid.kernel) {
    const double closed = bounds::lambda5(theta, x);
    const double quad = lambda5_by_quadrature(theta, x, tol);
    const double rel = std::abs(closed - quad) / std::abs(closed);
    if (!(rel <= out.max_rel_kernel) && !std::isnan(out.max_rel_kernel)) {
      out.max_rel_kernel = rel;
      out.worst_kernel = {theta, x};
    }
    ++out.kernel_points;
  }
  return out;
}

}  // namespace hsc::verify
