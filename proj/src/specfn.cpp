#include "hsc/specfn.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "hsc/errors.hpp"
#include "hsc/quadrature.hpp"

namespace hsc::specfn {
namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoef = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    std::ostringstream os;
    os << what << ": argument must be positive and finite, got " << v;
    throw DomainError(os.str());
  }
}

void check_region(double a, double b, double c, double z) {
  std::ostringstream os;
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) ||
      !std::isfinite(z)) {
    os << "hyp2f1: non-finite parameter";
  } else if (!(b > 0.0)) {
    os << "hyp2f1: need b > 0, got b = " << b;
  } else if (!(c > b)) {
    os << "hyp2f1: need c > b, got b = " << b << ", c = " << c;
  } else if (!(a >= 0.0)) {
    os << "hyp2f1: need a >= 0, got a = " << a;
  } else if (!(z >= 0.0 && z <= kMaxHypergeometricZ)) {
    os << "hyp2f1: need 0 <= z < 1, got z = " << z;
  } else {
    return;
  }
  throw DomainError(os.str());
}

}  // namespace

void SpecFnConfig::validate() const {
  if (!(series_rel_tol > 0.0 && series_rel_tol < 1e-6)) {
    throw DomainError("SpecFnConfig: series_rel_tol must lie in (0, 1e-6)");
  }
  if (!(z_series_cutoff > 0.0 && z_series_cutoff < 1.0)) {
    throw DomainError("SpecFnConfig: z_series_cutoff must lie in (0, 1)");
  }
  if (series_max_terms == 0) {
    throw DomainError("SpecFnConfig: series_max_terms must be positive");
  }
  if (!(quad_rel_tol > 0.0)) {
    throw DomainError("SpecFnConfig: quad_rel_tol must be positive");
  }
}

double ln_gamma(double x) {
  require_positive(x, "ln_gamma");
  // Lanczos sum for Gamma(x) = Gamma((x - 1) + 1).
  const double xm1 = x - 1.0;
  double sum = kLanczosCoef[0];
  for (std::size_t i = 1; i < kLanczosCoef.size(); ++i) {
    sum += kLanczosCoef[i] / (xm1 + static_cast<double>(i));
  }
  const double t = xm1 + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (xm1 + 0.5) * std::log(t) -
         t + std::log(sum);
}

double beta(double x, double y) {
  require_positive(x, "beta");
  require_positive(y, "beta");
  return std::exp(ln_gamma(x) + ln_gamma(y) - ln_gamma(x + y));
}

double hyp2f1_series(double a, double b, double c, double z,
                     const SpecFnConfig& cfg) {
  check_region(a, b, c, z);
  double term = 1.0;
  double sum = 1.0;
  int small_in_a_row = 0;
  for (std::size_t n = 0; n < cfg.series_max_terms; ++n) {
    const double k = static_cast<double>(n);
    term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
    sum += term;
    if (std::abs(term) <= cfg.series_rel_tol * std::abs(sum)) {
      if (++small_in_a_row == 2) return sum;
    } else {
      small_in_a_row = 0;
    }
  }
  throw NumericError("hyp2f1: Gauss series did not converge", sum,
                     std::abs(term));
}

double hyp2f1_euler(double a, double b, double c, double z,
                    const SpecFnConfig& cfg) {
  check_region(a, b, c, z);
  const double left_exp = b;       // t^(b-1)
  const double right_exp = c - b;  // (1-t)^(c-b-1)
  const double zc = 1.0 - z;

  // (1 - z t) written through w = 1 - t to keep the digits near t = 1.
  auto body = [=](double w) { return std::pow(zc + z * w, -a); };

  numeric::QuadOptions opts;
  opts.abs_tol = 0.0;
  opts.rel_tol = cfg.quad_rel_tol;

  // Each half is integrated in a variable that removes an algebraic
  // endpoint singularity when the exponent is negative.
  double left = 0.0;
  if (left_exp < 1.0) {
    // t = u^(1/b): t^(b-1) dt = du / b
    const double inv = 1.0 / left_exp;
    left = numeric::integrate(
               [=](double u) {
                 const double t = std::pow(u, inv);
                 return std::pow(1.0 - t, right_exp - 1.0) * body(1.0 - t);
               },
               0.0, std::pow(0.5, left_exp), opts)
               .value /
           left_exp;
  } else {
    left = numeric::integrate(
               [=](double t) {
                 return std::pow(t, left_exp - 1.0) *
                        std::pow(1.0 - t, right_exp - 1.0) * body(1.0 - t);
               },
               0.0, 0.5, opts)
               .value;
  }

  // The right half carries a peak of width about 1 - z at w = 0. Split
  // [0, 1/2] geometrically from that scale so each piece stays smooth.
  std::vector<double> w_breaks{0.0};
  for (double w = zc; w < 0.5; w *= 8.0) {
    if (w > 0.0) w_breaks.push_back(w);
  }
  w_breaks.push_back(0.5);

  double right = 0.0;
  if (right_exp < 1.0) {
    // w = v^(1/d): w^(d-1) dw = dv / d
    const double inv = 1.0 / right_exp;
    auto g = [=](double v) {
      const double w = std::pow(v, inv);
      return std::pow(1.0 - w, left_exp - 1.0) * body(w);
    };
    for (std::size_t i = 1; i < w_breaks.size(); ++i) {
      const double lo = std::pow(w_breaks[i - 1], right_exp);
      const double hi = std::pow(w_breaks[i], right_exp);
      if (lo < hi) right += numeric::integrate(g, lo, hi, opts).value;
    }
    right /= right_exp;
  } else {
    auto g = [=](double w) {
      return std::pow(1.0 - w, left_exp - 1.0) *
             std::pow(w, right_exp - 1.0) * body(w);
    };
    for (std::size_t i = 1; i < w_breaks.size(); ++i) {
      right += numeric::integrate(g, w_breaks[i - 1], w_breaks[i], opts).value;
    }
  }

  return (left + right) / beta(b, c - b);
}

double hyp2f1(double a, double b, double c, double z, const SpecFnConfig& cfg) {
  check_region(a, b, c, z);
  if (z == 0.0 || a == 0.0) return 1.0;
  if (z <= cfg.z_series_cutoff) return hyp2f1_series(a, b, c, z, cfg);
  return hyp2f1_euler(a, b, c, z, cfg);
}

}  // namespace hsc::specfn
