#pragma once

#include <cstddef>
#include <functional>

namespace hsc::numeric {

struct QuadResult {
  double value = 0.0;
  double err_est = 0.0;  // always >= 0
  std::size_t evals = 0;
};

struct QuadOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_depth = 50;
  std::size_t max_intervals = 20000;
};

using Integrand = std::function<double(double)>;

/// Globally adaptive Gauss-Kronrod (7/15) quadrature over [lo, hi].
///
/// The interval with the largest |K15 - G7| is bisected until the summed
/// estimate drops below max(abs_tol, rel_tol * |value|). Intervals whose
/// estimate is already at the rounding floor are frozen. The result is
/// bit-reproducible: splitting order and final summation order depend only
/// on the integrand values.
///
/// Throws DomainError on lo >= hi or a non-finite sample, NumericError when
/// the depth/interval budget runs out or the tolerance is below the
/// rounding floor.
QuadResult integrate(const Integrand& f, double lo, double hi,
                     const QuadOptions& opts);

/// Mixed tolerance shorthand: abs_tol = rel_tol = tol.
QuadResult integrate(const Integrand& f, double lo, double hi,
                     double tol = 1e-10);

}  // namespace hsc::numeric
