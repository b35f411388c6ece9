#pragma once

// Seeded property suites over every module, run by `cube verify`. Each check
// compares an implementation against an independent route (finite
// differences, brute-force sampling, a second closed form) at fixed
// tolerances.

#include <cstdint>
#include <string>
#include <vector>

#include "biotcube/material.hpp"

namespace biotcube {

struct CheckResult {
  std::string module;
  std::string name;
  bool passed;
  /// Worst observed deviation or the first counterexample.
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 42;
  /// Roughly a tenth of the sample counts.
  bool quick = false;
  double tol = 1e-9;
};

std::vector<CheckResult> run_verification(StiffnessRatio m, const VerifyOptions& options = {});

}  // namespace biotcube
