#pragma once

#include <cstddef>

namespace hsc::specfn {

struct SpecFnConfig {
  double series_rel_tol = 1e-16;
  std::size_t series_max_terms = 20000;
  // Gauss series for z <= cutoff, Euler integral above it.
  double z_series_cutoff = 0.9;
  double quad_rel_tol = 1e-13;

  /// Throws DomainError if a field is out of range.
  void validate() const;
};

/// Largest z accepted by hyp2f1; closer to 1 is treated as the pole.
inline constexpr double kMaxHypergeometricZ = 1.0 - 1e-12;

/// ln Gamma(x) for x > 0 (Lanczos, g = 7, nine terms).
double ln_gamma(double x);

/// Euler Beta function Gamma(x)Gamma(y)/Gamma(x+y).
double beta(double x, double y);

/// Gauss hypergeometric 2F1(a, b; c; z) on c > b > 0, a >= 0, 0 <= z < 1.
double hyp2f1(double a, double b, double c, double z,
              const SpecFnConfig& cfg = {});

/// The two evaluation routes, exposed so they can be checked against each
/// other. Neither applies the z cutoff.
double hyp2f1_series(double a, double b, double c, double z,
                     const SpecFnConfig& cfg = {});
double hyp2f1_euler(double a, double b, double c, double z,
                    const SpecFnConfig& cfg = {});

}  // namespace hsc::specfn
