#pragma once

// The acceptance checks as library calls, shared by the acceptance test
// binary and the `verify` subcommand.

#include <ostream>
#include <string>
#include <vector>

namespace lie_contact {

struct CheckResult {
  std::string name;
  double measured = 0.0;
  double threshold = 0.0;
  bool pass = false;
  double seconds = 0.0;
  std::string detail;
};

CheckResult check_involute_reproduction();
CheckResult check_cross_oracle();
CheckResult check_conservation();
CheckResult check_homothety_straightness();
CheckResult check_so3_closure();
CheckResult check_classification();
CheckResult check_complete_integrals_lift();
CheckResult check_projected_hyperplane();
CheckResult check_duality_invariance();
CheckResult check_contact_kernel();

std::vector<CheckResult> run_acceptance_suite();

/// One "PASS|FAIL name measured threshold seconds detail" line per check.
void print_results(const std::vector<CheckResult>& results, std::ostream& out);

}  // namespace lie_contact
