#pragma once

#include <optional>
#include <string>
#include <vector>

namespace gptstat {

// One row of the full verification run.
struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double observed = 0.0;  // worst deviation/residual seen
  double tol = 0.0;       // bound `observed` was held to
  double seconds = 0.0;
  std::string detail;
};

// Runs the complete claim-verification suite: exact construction of the
// removal and family matrices, the three physicality conditions across the
// family, quantum equivalence and theorems, permanent cross-checks, quon
// limits, and the characterize/realize round trip. Criteria with runtime
// bounds also fail when the bound is exceeded.
//
// tol_override replaces each criterion's numeric tolerance (runtime bounds
// are untouched). Sweeps use fixed seeds; the run is deterministic.
std::vector<CriterionResult> run_suite(
    std::optional<double> tol_override = std::nullopt);

}  // namespace gptstat
