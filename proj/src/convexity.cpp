#include "hsc/convexity.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hsc/errors.hpp"

namespace hsc::convexity {
namespace {

std::vector<double> axis(double lo, double hi, std::size_t n) {
  if (n < 2) throw UsageError("convexity grid needs at least 2 points per axis");
  std::vector<double> pts(n);
  const double h = (hi - lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) pts[i] = lo + h * static_cast<double>(i);
  pts.back() = hi;
  return pts;
}

struct Reducer {
  double best = -std::numeric_limits<double>::infinity();
  Triple witness;
  std::size_t count = 0;

  void offer(double v, const Triple& at) {
    ++count;
    if (v > best || (v == best && at < witness)) {
      best = v;
      witness = at;
    }
  }
};

// Random triples come from a fixed engine with the raw 53-bit mapping so the
// sample set does not depend on the standard library's distributions.
template <class Fn>
void draw_random(const GridSpec& grid, double lo, double hi, Fn&& visit) {
  std::mt19937_64 gen(grid.seed);
  auto unit = [&gen] {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
  };
  for (std::size_t i = 0; i < grid.random_samples; ++i) {
    const double x = lo + (hi - lo) * unit();
    const double y = lo + (hi - lo) * unit();
    const double t = unit();
    visit(Triple{x, y, t});
  }
}

template <class Fn>
ConvexityReport scan(ConvexityMode mode, double s, double lo, double hi,
                     const GridSpec& grid, Fn&& violation) {
  const auto xs = axis(lo, hi, grid.n_xy);
  const auto ts = axis(0.0, 1.0, grid.n_t);

  Reducer red;
  for (double x : xs) {
    for (double y : xs) {
      for (double t : ts) red.offer(violation(x, y, t), Triple{x, y, t});
    }
  }
  draw_random(grid, lo, hi, [&](const Triple& p) {
    red.offer(violation(p.x, p.y, p.t), p);
  });

  ConvexityReport rep;
  rep.mode = mode;
  rep.s = s;
  rep.max_violation = red.best;
  rep.witness = red.witness;
  rep.samples = red.count;
  if (grid.random_samples > 0) rep.seed = grid.seed;
  return rep;
}

}  // namespace

std::string_view to_string(ConvexityMode mode) {
  switch (mode) {
    case ConvexityMode::s_convex_second_sense:
      return "s_convex_second_sense";
    case ConvexityMode::harmonically_convex:
      return "harmonically_convex";
    case ConvexityMode::harmonically_s_convex:
      return "harmonically_s_convex";
  }
  return "unknown";
}

ConvexityMode parse_mode(std::string_view text) {
  for (auto m : {ConvexityMode::s_convex_second_sense,
                 ConvexityMode::harmonically_convex,
                 ConvexityMode::harmonically_s_convex}) {
    if (text == to_string(m)) return m;
  }
  throw UsageError("unknown convexity mode '" + std::string(text) + "'");
}

SExponent::SExponent(double s) : s_(s) {
  if (!(s > 0.0 && s <= 1.0)) {
    std::ostringstream os;
    os << "s must lie in (0, 1], got " << s;
    throw DomainError(os.str());
  }
}

double harmonic_combination(double x, double y, double t) {
  return x * y / (t * x + (1.0 - t) * y);
}

ConvexityReport check_convexity(const numeric::FunctionSpec& f, double lo,
                                double hi, ConvexityMode mode, SExponent s,
                                const GridSpec& grid) {
  const bool harmonic = mode != ConvexityMode::s_convex_second_sense;
  if (!(lo < hi) || !(lo >= 0.0) || (harmonic && !(lo > 0.0))) {
    std::ostringstream os;
    os << "check_convexity: bad interval [" << lo << ", " << hi << "] for "
       << to_string(mode);
    throw DomainError(os.str());
  }
  if (!f.contains(lo) || !f.contains(hi)) {
    throw DomainError("check_convexity: interval leaves the domain of " + f.id);
  }

  const double sv =
      mode == ConvexityMode::harmonically_convex ? 1.0 : s.value();

  if (!harmonic) {
    return scan(mode, sv, lo, hi, grid, [&](double x, double y, double t) {
      const double lhs = f(t * x + (1.0 - t) * y);
      const double rhs = std::pow(t, sv) * f(x) + std::pow(1.0 - t, sv) * f(y);
      return lhs - rhs;
    });
  }
  return scan(mode, sv, lo, hi, grid, [&](double x, double y, double t) {
    const double lhs = f(harmonic_combination(x, y, t));
    const double rhs = std::pow(t, sv) * f(y) + std::pow(1.0 - t, sv) * f(x);
    return lhs - rhs;
  });
}

ConvexityReport check_convexity(const numeric::FunctionSpec& f,
                                const numeric::Interval& iv,
                                ConvexityMode mode, SExponent s,
                                const GridSpec& grid) {
  return check_convexity(f, iv.a(), iv.b(), mode, s, grid);
}

ConvexityReport check_am_hm(const numeric::Interval& iv, const GridSpec& grid) {
  return scan(ConvexityMode::harmonically_convex, 1.0, iv.a(), iv.b(), grid,
              [](double x, double y, double t) {
                const double d = x - y;
                return -(t * (1.0 - t) * d * d) / (t * x + (1.0 - t) * y);
              });
}

bool is_nondecreasing(const numeric::FunctionSpec& f, double lo, double hi,
                      std::size_t n) {
  const auto xs = axis(lo, hi, n);
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (f(xs[i]) < f(xs[i - 1]) - kViolationTolerance) return false;
  }
  return true;
}

bool is_nonincreasing(const numeric::FunctionSpec& f, double lo, double hi,
                      std::size_t n) {
  const auto xs = axis(lo, hi, n);
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (f(xs[i]) > f(xs[i - 1]) + kViolationTolerance) return false;
  }
  return true;
}

}  // namespace hsc::convexity
