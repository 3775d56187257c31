#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hsc/verify.hpp"

namespace hsc::verify {

struct SelftestOptions {
  double tol = kOracleTol;     // quadrature tolerance for every oracle
  bool printed_kind2 = false;  // inject the miscopied kind-2 closed form
};

struct SuiteRow {
  std::string name;
  bool pass = false;
  double metric = 0.0;     // worst observed value of the suite's statistic
  double threshold = 0.0;  // the bound the statistic is held to
  std::size_t cases = 0;
  std::string detail;
};

/// Runs the full verification battery: closed-form fidelity of the
/// coefficient family, the integral identity, both Hermite-Hadamard chains,
/// the Ostrowski-type matrix with hypothesis gates, the derivative-bound
/// variants, the classic bound, the convexity transfer checks and the
/// special-function spot checks. Failures inside a suite are caught and
/// reported on its row.
std::vector<SuiteRow> run_selftest(const SelftestOptions& opts = {});

}  // namespace hsc::verify
