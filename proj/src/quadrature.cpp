#include "hsc/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "hsc/errors.hpp"

namespace hsc::numeric {
namespace {

// Kronrod abscissae on [0,1): odd indices are the 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Piece {
  double lo;
  double hi;
  double value;
  double err;
  int depth;
  bool frozen;
};

double sample(const Integrand& f, double t, std::size_t& evals) {
  ++evals;
  const double v = f(t);
  if (!std::isfinite(v)) {
    std::ostringstream os;
    os << "integrate: non-finite integrand value " << v << " at " << t;
    throw DomainError(os.str());
  }
  return v;
}

Piece gk15(const Integrand& f, double lo, double hi, int depth,
           std::size_t& evals) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);

  const double fc = sample(f, center, evals);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  double absum = std::abs(fc) * kWgk[7];

  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = sample(f, center - dx, evals);
    const double f2 = sample(f, center + dx, evals);
    kronrod += kWgk[j] * (f1 + f2);
    absum += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }

  Piece p{lo, hi, kronrod * half, std::abs((kronrod - gauss) * half), depth,
          false};
  const double floor =
      50.0 * std::numeric_limits<double>::epsilon() * absum * half;
  if (p.err <= floor) {
    p.err = floor;
    p.frozen = true;
  }
  // No room left to bisect in floating point.
  if (!(lo < center && center < hi)) p.frozen = true;
  return p;
}

// Heap order: larger error first, ties broken toward the leftmost piece.
bool refine_later(const Piece& x, const Piece& y) {
  if (x.err != y.err) return x.err < y.err;
  return x.lo > y.lo;
}

}  // namespace

QuadResult integrate(const Integrand& f, double lo, double hi,
                     const QuadOptions& opts) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    std::ostringstream os;
    os << "integrate: need finite lo < hi, got [" << lo << ", " << hi << "]";
    throw DomainError(os.str());
  }

  QuadResult out;
  std::vector<Piece> done;
  std::vector<Piece> open;

  auto add = [&](Piece p) {
    if (p.frozen) {
      done.push_back(p);
    } else {
      open.push_back(p);
      std::push_heap(open.begin(), open.end(), refine_later);
    }
  };

  add(gk15(f, lo, hi, 0, out.evals));

  auto totals = [&] {
    double value = 0.0;
    double err = 0.0;
    for (const auto& p : done) {
      value += p.value;
      err += p.err;
    }
    for (const auto& p : open) {
      value += p.value;
      err += p.err;
    }
    return std::pair{value, err};
  };

  for (;;) {
    auto [value, err] = totals();
    const double target = std::max(opts.abs_tol, opts.rel_tol * std::abs(value));
    if (err <= target) break;

    if (open.empty()) {
      throw NumericError("integrate: tolerance below rounding floor", value,
                         err);
    }
    if (done.size() + open.size() >= opts.max_intervals) {
      throw NumericError("integrate: interval budget exhausted", value, err);
    }

    std::pop_heap(open.begin(), open.end(), refine_later);
    const Piece worst = open.back();
    open.pop_back();
    if (worst.depth >= opts.max_depth) {
      throw NumericError("integrate: maximum bisection depth exceeded", value,
                         err);
    }
    const double mid = 0.5 * (worst.lo + worst.hi);
    add(gk15(f, worst.lo, mid, worst.depth + 1, out.evals));
    add(gk15(f, mid, worst.hi, worst.depth + 1, out.evals));
  }

  done.insert(done.end(), open.begin(), open.end());
  std::sort(done.begin(), done.end(),
            [](const Piece& x, const Piece& y) { return x.lo < y.lo; });
  for (const auto& p : done) {
    out.value += p.value;
    out.err_est += p.err;
  }
  return out;
}

QuadResult integrate(const Integrand& f, double lo, double hi, double tol) {
  QuadOptions opts;
  opts.abs_tol = tol;
  opts.rel_tol = tol;
  return integrate(f, lo, hi, opts);
}

}  // namespace hsc::numeric
