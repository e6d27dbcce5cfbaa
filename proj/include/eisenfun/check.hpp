#pragma once

// The identity suite behind `eisenfun check`: every module's invariants over
// fixed grids, plus the printed-formula variants that are expected to fail.

#include <optional>
#include <string>
#include <vector>

namespace eisenfun {

struct CheckResult {
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  // For expected failures the check passes when the residual exceeds the
  // tolerance, i.e. the printed formula is demonstrably wrong.
  bool expected_failure = false;
  bool errored = false;  // the measurement threw; never a pass
  std::string note;

  bool passed() const {
    if (errored) return false;
    return expected_failure ? max_residual > tolerance : max_residual < tolerance;
  }
};

struct SuiteOptions {
  // Replaces the tolerance of every ordinary (not expected-failure) check.
  std::optional<double> tolerance_override;
};

std::vector<CheckResult> run_identity_suite(const SuiteOptions& options = {});

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace eisenfun
