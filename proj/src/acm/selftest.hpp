#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace acm {

struct SuiteResult {
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct SelftestReport {
  int n = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  bool pass = false;
  std::vector<SuiteResult> suites;
};

/// Runs every invariant suite at the given size: structure axioms, the
/// projection oracle, form closure and reconstruction, both identity tables,
/// the full decomposition properties, involutions, equivariance, the sampled
/// subspace oracle, the classifier and the geometry pipeline for built-in
/// charts of matching dimension.
SelftestReport run_selftest(int n, int trials, std::uint64_t seed);

}  // namespace acm
