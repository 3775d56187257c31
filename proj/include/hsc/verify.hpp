#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hsc/bounds.hpp"
#include "hsc/convexity.hpp"
#include "hsc/functions.hpp"

namespace hsc::verify {

/// A bound instance counts as holding when slack >= -kSlackTolerance.
inline constexpr double kSlackTolerance = 1e-9;

/// Default quadrature tolerance for the referee's own integrals.
inline constexpr double kOracleTol = 1e-12;

// ---------------------------------------------------------------------------
// Integral identity
// ---------------------------------------------------------------------------

struct IdentitySides {
  double lhs;  // f(x) - weighted mean
  double rhs;  // kernel integrals of f' on both sides of x
};

/// Both sides of
///   f(x) - (ab/(b-a)) int_a^b f/u^2
///     = (ab/(b-a)) [ (x-a)^2 int_0^1 t/(ta+(1-t)x)^2 f'(ax/(ta+(1-t)x)) dt
///                  - (b-x)^2 int_0^1 t/(tb+(1-t)x)^2 f'(bx/(tb+(1-t)x)) dt ]
/// evaluated by quadrature.
IdentitySides identity_sides(const numeric::FunctionSpec& f, double x,
                             const numeric::Interval& iv,
                             double tol = kOracleTol);

/// |lhs - rhs| of identity_sides.
double lemma_residual(const numeric::FunctionSpec& f, double x,
                      const numeric::Interval& iv, double tol = kOracleTol);

// ---------------------------------------------------------------------------
// Theorem sweeps
// ---------------------------------------------------------------------------

struct VerifyRequest {
  bounds::Theorem theorem = bounds::Theorem::hermite_hadamard;
  numeric::FunctionSpec f;
  numeric::Interval iv{1.0, 2.0};
  convexity::SExponent s{1.0};
  // Required for the Ostrowski-type theorems.
  std::optional<bounds::Exponents> exponents;
  // Corollary mode: |f'| replaced by M, and |f'| <= M joins the hypothesis.
  std::optional<bounds::DerivBound> M;
  std::size_t x_grid = 9;
  convexity::GridSpec gate_grid{};
  double tol = kOracleTol;
};

struct GridInfo {
  std::string fn;
  double a = 0.0;
  double b = 0.0;
  double s = 0.0;
  std::optional<double> q;
  std::optional<double> p;
  std::optional<double> M;
  std::size_t x_count = 0;
};

struct VerifyReport {
  std::string theorem;
  GridInfo grid;
  convexity::ConvexityReport gate;
  std::vector<bounds::BoundResult> results;  // ordered by x ascending
  std::optional<double> min_slack;           // empty when no results
  bool hypothesis_ok = false;
  bool pass = false;
};

/// Gates the theorem on its hypothesis (harmonic s-convexity of f for T2_2,
/// of |f'|^q otherwise) and, when the gate passes, evaluates every bound
/// instance on the anchor grid. T2_2 yields two results: left-vs-middle and
/// middle-vs-right.
VerifyReport verify_theorem(const VerifyRequest& req);

// ---------------------------------------------------------------------------
// Closed form vs defining integral
// ---------------------------------------------------------------------------

/// Defining integral of lambda (kinds 1..4) by quadrature.
double lambda_by_quadrature(const bounds::LambdaArgs& args,
                            double tol = kOracleTol);

/// int_0^1 t/(t*theta + (1-t)*x)^2 dt by quadrature.
double lambda5_by_quadrature(double theta, double x, double tol = kOracleTol);

struct LambdaGrid {
  std::vector<bounds::LambdaArgs> family;
  std::vector<std::pair<double, double>> kernel;  // (theta, x) for lambda5
};

/// 240 points over kinds 1..4 and a lambda5 grid that straddles the switch
/// to the series branch.
LambdaGrid default_lambda_grid();

struct ConsistencyResult {
  double max_rel_family = 0.0;  // kinds 1..4
  double max_rel_kernel = 0.0;  // lambda5
  std::size_t family_points = 0;
  std::size_t kernel_points = 0;
  bounds::LambdaArgs worst_family{};
  std::pair<double, double> worst_kernel{};

  double max_rel() const {
    return max_rel_family > max_rel_kernel ? max_rel_family : max_rel_kernel;
  }
};

/// Max of |closed - quadrature| / |closed| over the grid.
ConsistencyResult lambda_consistency(const LambdaGrid& grid,
                                     const bounds::LambdaOptions& opts = {},
                                     double tol = kOracleTol);

}  // namespace hsc::verify
