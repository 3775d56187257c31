#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hsc/quadrature.hpp"

namespace hsc::numeric {

using ScalarFn = std::function<double(double)>;

/// An evaluable scalar function with an optional analytic derivative.
/// eval must be finite on [domain_lo, domain_hi].
struct FunctionSpec {
  std::string id;
  ScalarFn eval;
  std::optional<ScalarFn> deriv;
  double domain_lo = 0.0;
  double domain_hi = std::numeric_limits<double>::max();

  double operator()(double u) const { return eval(u); }
  bool contains(double u) const { return u >= domain_lo && u <= domain_hi; }
};

/// Closed interval [a, b] with 0 < a < b.
class Interval {
 public:
  Interval(double a, double b);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double length() const noexcept { return b_ - a_; }
  bool contains(double x) const noexcept { return x >= a_ && x <= b_; }

  /// n >= 1 equally spaced points including both endpoints (the midpoint
  /// when n == 1).
  std::vector<double> grid(std::size_t n) const;

 private:
  double a_;
  double b_;
};

inline constexpr double kDefaultTol = 1e-10;

/// Parses a registry id: `const:<c>`, `id`, `pow:<r>` (r > 0), `inv`, `neg`.
/// Throws UsageError on anything else.
FunctionSpec make_function(std::string_view id);

/// Registry ids exercised by the verification sweeps.
std::vector<std::string> registry_ids();

/// (ab/(b-a)) * integral_a^b f(u)/u^2 du, the harmonic integral mean.
///
/// Evaluated after the substitution w = 1/u, which turns it into the plain
/// mean of f(1/w) over [1/b, 1/a].
double weighted_mean(const FunctionSpec& f, const Interval& iv,
                     double tol = kDefaultTol);

/// (1/(b-a)) * integral_a^b f(u) du. Accepts a = 0.
double arithmetic_mean(const FunctionSpec& f, double a, double b,
                       double tol = kDefaultTol);

/// Analytic derivative when available, otherwise a central difference with
/// step cbrt(eps) * max(1, |x|).
double derivative(const FunctionSpec& f, double x);

}  // namespace hsc::numeric
