#pragma once

#include <iosfwd>
#include <string>

namespace facloc {

/// Full verification suite for the documented guarantees: tight instances,
/// robustness sweeps, ratio bounds, and strategyproofness audits. Prints one
/// PASS/FAIL line per check to `out` and returns true iff all checks pass.
/// When out_dir is nonempty, a machine-readable summary CSV is written there.
bool run_check_suite(std::ostream& out, const std::string& out_dir = "");

}  // namespace facloc
