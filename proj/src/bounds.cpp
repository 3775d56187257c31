#include "hsc/bounds.hpp"

#include <cmath>
#include <sstream>

#include "hsc/errors.hpp"

namespace hsc::bounds {
namespace {

struct SidePair {
  double with_anchor;    // kind 1 or 3, multiplies |f'(x)|^q
  double with_endpoint;  // kind 2 or 4, multiplies |f'(a)|^q or |f'(b)|^q
};

SidePair left_pair(double a, double x, double s, double vartheta, double rho,
                   const LambdaOptions& opts) {
  return {lambda({1, a, x, s, vartheta, rho}, opts),
          lambda({2, a, x, s, vartheta, rho}, opts)};
}

SidePair right_pair(double b, double x, double s, double vartheta, double rho,
                    const LambdaOptions& opts) {
  return {lambda({3, b, x, s, vartheta, rho}, opts),
          lambda({4, b, x, s, vartheta, rho}, opts)};
}

void require_anchor(double x, const numeric::Interval& iv) {
  if (!iv.contains(x)) {
    std::ostringstream os;
    os << "anchor x = " << x << " lies outside [" << iv.a() << ", " << iv.b()
       << "]";
    throw DomainError(os.str());
  }
}

double power_q(double v, double q) { return std::pow(std::abs(v), q); }

PowerParam power_of(Theorem th, const Exponents& exps) {
  if (const auto* pp = std::get_if<PowerParam>(&exps)) return *pp;
  throw UsageError(std::string(to_id(th)) + " takes a single exponent q >= 1");
}

ConjugatePair pair_of(Theorem th, const Exponents& exps) {
  if (const auto* cp = std::get_if<ConjugatePair>(&exps)) return *cp;
  throw UsageError(std::string(to_id(th)) + " takes a conjugate pair (p, q)");
}

}  // namespace

double lambda_z(const LambdaArgs& args) {
  std::ostringstream os;
  if (args.kind < 1 || args.kind > 4) {
    os << "lambda: kind must be 1..4, got " << args.kind;
  } else if (!(args.theta > 0.0) || !(args.x > 0.0) ||
             !std::isfinite(args.theta) || !std::isfinite(args.x)) {
    os << "lambda: theta and x must be positive";
  } else if (!(args.s >= 0.0) || !(args.rho >= 0.0) ||
             !(args.vartheta > 0.0) || !std::isfinite(args.s) ||
             !std::isfinite(args.rho) || !std::isfinite(args.vartheta)) {
    os << "lambda: need s >= 0, rho >= 0, vartheta > 0";
  } else if (args.kind <= 2 && !(args.theta <= args.x)) {
    os << "lambda: kinds 1 and 2 need theta <= x, got theta = " << args.theta
       << ", x = " << args.x;
  } else if (args.kind >= 3 && !(args.x <= args.theta)) {
    os << "lambda: kinds 3 and 4 need x <= theta, got theta = " << args.theta
       << ", x = " << args.x;
  } else {
    const double z =
        args.kind <= 2 ? 1.0 - args.theta / args.x : 1.0 - args.x / args.theta;
    if (z < specfn::kMaxHypergeometricZ) return z;
    os << "lambda: z = " << z << " too close to 1";
  }
  throw DomainError(os.str());
}

double lambda(const LambdaArgs& args, const LambdaOptions& opts) {
  const double z = lambda_z(args);
  const double s = args.s;
  const double rho = args.rho;
  const double a2 = 2.0 * args.vartheta;
  const double c = rho + s + 2.0;
  const auto& cfg = opts.specfn;

  switch (args.kind) {
    case 1:
      return specfn::beta(rho + s + 1.0, 1.0) / std::pow(args.x, a2) *
             specfn::hyp2f1(a2, rho + s + 1.0, c, z, cfg);
    case 2: {
      const double beta_factor = opts.printed_kind2
                                     ? specfn::beta(rho + 1.0, 1.0)
                                     : specfn::beta(rho + 1.0, s + 1.0);
      return beta_factor / std::pow(args.x, a2) *
             specfn::hyp2f1(a2, rho + 1.0, c, z, cfg);
    }
    case 3:
      return specfn::beta(1.0, rho + s + 1.0) / std::pow(args.theta, a2) *
             specfn::hyp2f1(a2, 1.0, c, z, cfg);
    default:
      return specfn::beta(s + 1.0, rho + 1.0) / std::pow(args.theta, a2) *
             specfn::hyp2f1(a2, s + 1.0, c, z, cfg);
  }
}

double lambda5_closed(double theta, double x) {
  const double d = x - theta;
  return (1.0 / theta - std::log1p(d / theta) / d) / d;
}

double lambda5_series(double theta, double x) {
  // x^-2 * sum_n (n+1)/(n+2) eps^n with eps = 1 - theta/x.
  const double eps = 1.0 - theta / x;
  double sum = 0.0;
  double pw = 1.0;
  for (int n = 0; n < 12; ++n) {
    sum += (n + 1.0) / (n + 2.0) * pw;
    pw *= eps;
  }
  return sum / (x * x);
}

double lambda5(double theta, double x) {
  if (!(theta > 0.0) || !(x > 0.0) || !std::isfinite(theta) ||
      !std::isfinite(x)) {
    std::ostringstream os;
    os << "lambda5: arguments must be positive, got (" << theta << ", " << x
       << ")";
    throw DomainError(os.str());
  }
  if (std::abs(1.0 - theta / x) < kLambda5SeriesBand) {
    return lambda5_series(theta, x);
  }
  return lambda5_closed(theta, x);
}

PowerParam::PowerParam(double q) : q_(q) {
  if (!(q >= 1.0) || !std::isfinite(q)) {
    std::ostringstream os;
    os << "q must be >= 1, got " << q;
    throw DomainError(os.str());
  }
}

ConjugatePair::ConjugatePair(double p, double q) : p_(p), q_(q) {
  if (!(p > 1.0) || !(q > 1.0) || !std::isfinite(p) || !std::isfinite(q) ||
      std::abs(1.0 / p + 1.0 / q - 1.0) > 1e-14) {
    std::ostringstream os;
    os.precision(17);
    os << "(p, q) = (" << p << ", " << q << ") is not a conjugate pair";
    throw DomainError(os.str());
  }
}

ConjugatePair ConjugatePair::from_q(double q) {
  if (!(q > 1.0)) {
    std::ostringstream os;
    os << "conjugate exponent needs q > 1, got " << q;
    throw DomainError(os.str());
  }
  return ConjugatePair(q / (q - 1.0), q);
}

DerivBound::DerivBound(double m) : m_(m) {
  if (!(m >= 0.0) || !std::isfinite(m)) {
    std::ostringstream os;
    os << "M must be >= 0, got " << m;
    throw DomainError(os.str());
  }
}

std::string_view to_id(Theorem th) {
  switch (th) {
    case Theorem::hermite_hadamard:
      return "T2_2";
    case Theorem::power_mean:
      return "T2_3";
    case Theorem::power_mean_linear:
      return "T2_4";
    case Theorem::power_mean_kernel:
      return "T2_5";
    case Theorem::holder:
      return "T2_6";
    case Theorem::holder_kernel:
      return "T2_7";
  }
  return "unknown";
}

Theorem parse_theorem(std::string_view id) {
  for (auto th : {Theorem::hermite_hadamard, Theorem::power_mean,
                  Theorem::power_mean_linear, Theorem::power_mean_kernel,
                  Theorem::holder, Theorem::holder_kernel}) {
    if (id == to_id(th)) return th;
  }
  throw UsageError("unknown theorem id '" + std::string(id) + "'");
}

bool is_ostrowski(Theorem th) { return th != Theorem::hermite_hadamard; }

HHTriple hh_harmonic_bounds(const numeric::FunctionSpec& f,
                            const numeric::Interval& iv, convexity::SExponent s,
                            double tol) {
  const double a = iv.a();
  const double b = iv.b();
  const double sv = s.value();
  return {std::pow(2.0, sv - 1.0) * f(2.0 * a * b / (a + b)),
          numeric::weighted_mean(f, iv, tol), (f(a) + f(b)) / (sv + 1.0)};
}

HHTriple hh_s_convex_bounds(const numeric::FunctionSpec& f, double a, double b,
                            convexity::SExponent s, double tol) {
  const double sv = s.value();
  return {std::pow(2.0, sv - 1.0) * f(0.5 * (a + b)),
          numeric::arithmetic_mean(f, a, b, tol), (f(a) + f(b)) / (sv + 1.0)};
}

double classic_ostrowski_rhs(double x, double a, double b, DerivBound M) {
  if (!(a < b) || !(x >= a && x <= b)) {
    std::ostringstream os;
    os << "classic_ostrowski_rhs: need a <= x <= b with a < b, got x = " << x
       << " on [" << a << ", " << b << "]";
    throw DomainError(os.str());
  }
  const double len = b - a;
  const double off = x - 0.5 * (a + b);
  return M.value() * len * (0.25 + off * off / (len * len));
}

double ostrowski_lhs(const numeric::FunctionSpec& f, double x,
                     const numeric::Interval& iv, double tol) {
  require_anchor(x, iv);
  return std::abs(f(x) - numeric::weighted_mean(f, iv, tol));
}

double ostrowski_rhs(Theorem th, double x, const numeric::Interval& iv,
                     double s, const Exponents& exps,
                     const DerivMagnitudes& fprime, const LambdaOptions& opts) {
  require_anchor(x, iv);
  if (!is_ostrowski(th)) {
    throw UsageError("ostrowski_rhs: T2_2 is not an Ostrowski-type bound");
  }
  const double a = iv.a();
  const double b = iv.b();
  const double scale = a * b / (b - a);
  const bool left_live = x > a;
  const bool right_live = x < b;
  const double left_w = (x - a) * (x - a);
  const double right_w = (b - x) * (b - x);

  if (th == Theorem::holder_kernel) {
    const auto cp = pair_of(th, exps);
    const double p = cp.p();
    const double q = cp.q();
    const double gx = power_q(fprime.at_x, q);
    double sum = 0.0;
    if (left_live) {
      sum += std::pow(lambda({1, a, x, 0.0, p, p}, opts), 1.0 / p) * left_w *
             std::pow((gx + power_q(fprime.at_a, q)) / (s + 1.0), 1.0 / q);
    }
    if (right_live) {
      sum += std::pow(lambda({3, b, x, 0.0, p, p}, opts), 1.0 / p) * right_w *
             std::pow((gx + power_q(fprime.at_b, q)) / (s + 1.0), 1.0 / q);
    }
    return scale * sum;
  }

  double q = 0.0;
  double vartheta = 0.0;
  double rho = 0.0;
  double prefactor = 1.0;
  switch (th) {
    case Theorem::power_mean:
      q = power_of(th, exps).q();
      vartheta = q;
      rho = q;
      break;
    case Theorem::power_mean_linear:
      q = power_of(th, exps).q();
      vartheta = q;
      rho = 1.0;
      prefactor = std::pow(0.5, 1.0 - 1.0 / q);
      break;
    case Theorem::power_mean_kernel:
      q = power_of(th, exps).q();
      vartheta = 1.0;
      rho = 1.0;
      break;
    default: {
      const auto cp = pair_of(th, exps);
      q = cp.q();
      vartheta = q;
      rho = 0.0;
      prefactor = std::pow(1.0 / (cp.p() + 1.0), 1.0 / cp.p());
      break;
    }
  }

  const double gx = power_q(fprime.at_x, q);
  // Kernel weights lambda5^(1 - 1/q); exactly 1 at q = 1.
  auto kernel_weight = [&](double theta) {
    if (th != Theorem::power_mean_kernel || q == 1.0) return 1.0;
    return std::pow(lambda5(theta, x), 1.0 - 1.0 / q);
  };

  double sum = 0.0;
  if (left_live) {
    const auto lp = left_pair(a, x, s, vartheta, rho, opts);
    const double inner =
        lp.with_anchor * gx + lp.with_endpoint * power_q(fprime.at_a, q);
    sum += kernel_weight(a) * left_w * std::pow(inner, 1.0 / q);
  }
  if (right_live) {
    const auto rp = right_pair(b, x, s, vartheta, rho, opts);
    const double inner =
        rp.with_anchor * gx + rp.with_endpoint * power_q(fprime.at_b, q);
    sum += kernel_weight(b) * right_w * std::pow(inner, 1.0 / q);
  }
  return scale * prefactor * sum;
}

double ostrowski_rhs(Theorem th, const numeric::FunctionSpec& f, double x,
                     const numeric::Interval& iv, convexity::SExponent s,
                     const Exponents& exps, std::optional<DerivBound> M,
                     const LambdaOptions& opts) {
  DerivMagnitudes g{};
  if (M) {
    g = {M->value(), M->value(), M->value()};
  } else {
    g = {std::abs(numeric::derivative(f, x)),
         std::abs(numeric::derivative(f, iv.a())),
         std::abs(numeric::derivative(f, iv.b()))};
  }
  return ostrowski_rhs(th, x, iv, s.value(), exps, g, opts);
}

double corollary_rhs(Theorem th, double x, const numeric::Interval& iv,
                     double s, const Exponents& exps, DerivBound M,
                     const LambdaOptions& opts) {
  require_anchor(x, iv);
  const double a = iv.a();
  const double b = iv.b();
  const double scale = a * b / (b - a) * M.value();
  const bool left_live = x > a;
  const bool right_live = x < b;
  const double left_w = (x - a) * (x - a);
  const double right_w = (b - x) * (b - x);

  auto summed = [&](double vartheta, double rho, double q, double lw,
                    double rw) {
    double sum = 0.0;
    if (left_live) {
      const auto lp = left_pair(a, x, s, vartheta, rho, opts);
      sum += lw * left_w * std::pow(lp.with_anchor + lp.with_endpoint, 1.0 / q);
    }
    if (right_live) {
      const auto rp = right_pair(b, x, s, vartheta, rho, opts);
      sum +=
          rw * right_w * std::pow(rp.with_anchor + rp.with_endpoint, 1.0 / q);
    }
    return sum;
  };

  switch (th) {
    case Theorem::power_mean: {
      const double q = power_of(th, exps).q();
      return scale * summed(q, q, q, 1.0, 1.0);
    }
    case Theorem::power_mean_linear: {
      const double q = power_of(th, exps).q();
      return scale * std::pow(0.5, 1.0 - 1.0 / q) * summed(q, 1.0, q, 1.0, 1.0);
    }
    case Theorem::power_mean_kernel: {
      const double q = power_of(th, exps).q();
      const double e = 1.0 - 1.0 / q;
      const double lw = (q == 1.0 || !left_live) ? 1.0 : std::pow(lambda5(a, x), e);
      const double rw =
          (q == 1.0 || !right_live) ? 1.0 : std::pow(lambda5(b, x), e);
      return scale * summed(1.0, 1.0, q, lw, rw);
    }
    case Theorem::holder: {
      const auto cp = pair_of(th, exps);
      return scale * std::pow(1.0 / (cp.p() + 1.0), 1.0 / cp.p()) *
             summed(cp.q(), 0.0, cp.q(), 1.0, 1.0);
    }
    case Theorem::holder_kernel: {
      const auto cp = pair_of(th, exps);
      const double p = cp.p();
      double sum = 0.0;
      if (left_live) {
        sum += std::pow(lambda({1, a, x, 0.0, p, p}, opts), 1.0 / p) * left_w;
      }
      if (right_live) {
        sum += std::pow(lambda({3, b, x, 0.0, p, p}, opts), 1.0 / p) * right_w;
      }
      return scale * std::pow(2.0 / (s + 1.0), 1.0 / cp.q()) * sum;
    }
    case Theorem::hermite_hadamard:
      break;
  }
  throw UsageError("corollary_rhs: T2_2 has no derivative-bound variant");
}

BoundResult ostrowski_instance(Theorem th, const numeric::FunctionSpec& f,
                               double x, const numeric::Interval& iv,
                               convexity::SExponent s, const Exponents& exps,
                               std::optional<DerivBound> M, double tol) {
  BoundResult r;
  r.theorem = std::string(to_id(th));
  r.x = x;
  r.a = iv.a();
  r.b = iv.b();
  r.s = s.value();
  std::visit(
      [&r](const auto& e) {
        using E = std::decay_t<decltype(e)>;
        r.q = e.q();
        if constexpr (std::is_same_v<E, ConjugatePair>) r.p = e.p();
      },
      exps);
  if (M) r.M = M->value();
  r.lhs = ostrowski_lhs(f, x, iv, tol);
  r.rhs = ostrowski_rhs(th, f, x, iv, s, exps, M);
  r.slack = r.rhs - r.lhs;
  r.fd_derivative = !M && !f.deriv;
  return r;
}

}  // namespace hsc::bounds
