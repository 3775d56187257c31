#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "hsc/functions.hpp"

namespace hsc::convexity {

enum class ConvexityMode {
  s_convex_second_sense,  // f(tx + (1-t)y) <= t^s f(x) + (1-t)^s f(y)
  harmonically_convex,    // the s = 1 case of the next one
  harmonically_s_convex,  // f(xy/(tx + (1-t)y)) <= t^s f(y) + (1-t)^s f(x)
};

std::string_view to_string(ConvexityMode mode);
ConvexityMode parse_mode(std::string_view text);

/// Convexity exponent s in (0, 1].
class SExponent {
 public:
  explicit SExponent(double s);
  double value() const noexcept { return s_; }

 private:
  double s_;
};

/// Absolute slack allowed before a sampled triple counts as a violation.
inline constexpr double kViolationTolerance = 1e-12;

struct Triple {
  double x = 0.0;
  double y = 0.0;
  double t = 0.0;

  friend auto operator<=>(const Triple&, const Triple&) = default;
};

struct GridSpec {
  std::size_t n_xy = 32;  // points per spatial axis, endpoints included
  std::size_t n_t = 17;   // points on [0, 1], endpoints included
  std::size_t random_samples = 0;
  std::uint64_t seed = 0;
};

struct ConvexityReport {
  ConvexityMode mode = ConvexityMode::harmonically_s_convex;
  double s = 1.0;
  double max_violation = 0.0;  // max of lhs - rhs over all samples
  Triple witness;              // attains max_violation
  std::size_t samples = 0;
  std::optional<std::uint64_t> seed;  // set when random samples were drawn

  bool holds() const noexcept { return max_violation <= kViolationTolerance; }
};

/// xy / (tx + (1-t)y); lies between min(x, y) and max(x, y).
double harmonic_combination(double x, double y, double t);

/// Signed maximum of lhs - rhs of the defining inequality over
/// x, y in the grid of [lo, hi] and t in the grid of [0, 1], plus any
/// seeded random triples. The s-convex mode accepts lo = 0; the harmonic
/// modes need lo > 0. Ties keep the lexicographically smallest witness.
ConvexityReport check_convexity(const numeric::FunctionSpec& f, double lo,
                                double hi, ConvexityMode mode, SExponent s,
                                const GridSpec& grid = {});

ConvexityReport check_convexity(const numeric::FunctionSpec& f,
                                const numeric::Interval& iv,
                                ConvexityMode mode, SExponent s,
                                const GridSpec& grid = {});

/// The harmonic/arithmetic comparison xy/(tx+(1-t)y) <= ty + (1-t)x on the
/// grid. The violation is evaluated as -t(1-t)(x-y)^2/(tx+(1-t)y), which is
/// never positive in floating point.
ConvexityReport check_am_hm(const numeric::Interval& iv,
                            const GridSpec& grid = {});

/// Sampled monotonicity on n equally spaced points of [lo, hi].
bool is_nondecreasing(const numeric::FunctionSpec& f, double lo, double hi,
                      std::size_t n);
bool is_nonincreasing(const numeric::FunctionSpec& f, double lo, double hi,
                      std::size_t n);

}  // namespace hsc::convexity
