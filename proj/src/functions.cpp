#include "hsc/functions.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include "hsc/errors.hpp"

namespace hsc::numeric {
namespace {

double parse_number(std::string_view text, std::string_view whole) {
  double v = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || !std::isfinite(v)) {
    throw UsageError("unknown function id '" + std::string(whole) +
                     "': bad numeric parameter");
  }
  return v;
}

}  // namespace

Interval::Interval(double a, double b) : a_(a), b_(b) {
  if (!(a > 0.0) || !(a < b) || !std::isfinite(b)) {
    std::ostringstream os;
    os << "Interval: need 0 < a < b, got [" << a << ", " << b << "]";
    throw DomainError(os.str());
  }
}

std::vector<double> Interval::grid(std::size_t n) const {
  if (n == 0) throw UsageError("Interval::grid: need at least one point");
  if (n == 1) return {0.5 * (a_ + b_)};
  std::vector<double> pts(n);
  const double h = (b_ - a_) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    pts[i] = a_ + h * static_cast<double>(i);
  }
  pts.back() = b_;
  return pts;
}

FunctionSpec make_function(std::string_view id) {
  FunctionSpec f;
  f.id = std::string(id);

  if (id.starts_with("const:")) {
    const double c = parse_number(id.substr(6), id);
    f.eval = [c](double) { return c; };
    f.deriv = [](double) { return 0.0; };
  } else if (id == "id") {
    f.eval = [](double u) { return u; };
    f.deriv = [](double) { return 1.0; };
  } else if (id.starts_with("pow:")) {
    const double r = parse_number(id.substr(4), id);
    if (!(r > 0.0)) {
      throw UsageError("unknown function id '" + std::string(id) +
                       "': exponent must be positive");
    }
    f.eval = [r](double u) { return std::pow(u, r); };
    f.deriv = [r](double u) { return r * std::pow(u, r - 1.0); };
  } else if (id == "inv") {
    f.eval = [](double u) { return 1.0 / u; };
    f.deriv = [](double u) { return -1.0 / (u * u); };
    f.domain_lo = std::numeric_limits<double>::min();
  } else if (id == "neg") {
    f.eval = [](double u) { return -u; };
    f.deriv = [](double) { return -1.0; };
  } else {
    throw UsageError("unknown function id '" + std::string(id) + "'");
  }
  return f;
}

std::vector<std::string> registry_ids() {
  return {"const:2", "id", "pow:2", "pow:0.5", "inv", "neg"};
}

double weighted_mean(const FunctionSpec& f, const Interval& iv, double tol) {
  if (!f.contains(iv.a()) || !f.contains(iv.b())) {
    throw DomainError("weighted_mean: interval leaves the domain of " + f.id);
  }
  const double lo = 1.0 / iv.b();
  const double hi = 1.0 / iv.a();
  const auto r =
      integrate([&f](double w) { return f(1.0 / w); }, lo, hi, tol);
  return r.value / (hi - lo);
}

double arithmetic_mean(const FunctionSpec& f, double a, double b, double tol) {
  if (!(a >= 0.0) || !(a < b)) {
    throw DomainError("arithmetic_mean: need 0 <= a < b");
  }
  if (!f.contains(a) || !f.contains(b)) {
    throw DomainError("arithmetic_mean: interval leaves the domain of " + f.id);
  }
  return integrate(f.eval, a, b, tol).value / (b - a);
}

double derivative(const FunctionSpec& f, double x) {
  if (!f.contains(x)) {
    std::ostringstream os;
    os << "derivative: " << x << " is outside the domain of " << f.id;
    throw DomainError(os.str());
  }
  if (f.deriv) return (*f.deriv)(x);

  const double h = std::cbrt(std::numeric_limits<double>::epsilon()) *
                   std::max(1.0, std::abs(x));
  if (!f.contains(x - h) || !f.contains(x + h)) {
    std::ostringstream os;
    os << "derivative: " << x << " is too close to the domain boundary of "
       << f.id << " for a central difference";
    throw DomainError(os.str());
  }
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace hsc::numeric
