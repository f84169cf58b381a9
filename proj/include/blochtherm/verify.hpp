#pragma once

#include <string>
#include <vector>

namespace blochtherm {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// The cycle-level acceptance checks (benchmark efficiencies, ledgers,
/// entropy production, identity suite, integrator cross-validation,
/// structural and reparameterization invariants, output determinism).
std::vector<CheckResult> acceptance_checks(int samples_per_stroke = 10001);

/// Module-level property checks (state functions, rates, paths).
std::vector<CheckResult> property_checks();

/// Full suite: property checks followed by acceptance checks.
std::vector<CheckResult> run_verification(int samples_per_stroke = 10001);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace blochtherm
