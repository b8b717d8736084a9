#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace catfam {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // first counterexample or error, empty when passed
};

struct VerifyOptions {
  // Exhaustive sweeps clamp their generation range to this; each check also
  // keeps its own designed maximum, so raising the value past 10 only grows
  // the checks meant to scale.
  int exhaustive_max = 6;
  int workers = 0;  // 0 = hardware concurrency
};

// Runs the whole invariant suite: transform identities, stabilization
// bounds, censuses against closed forms, bijection roundtrips. Every check
// reports independently; nothing stops at the first failure.
std::vector<CheckResult> run_verification(const VerifyOptions& opts);

// One "PASS name" / "FAIL name: detail" line per check plus a summary.
// Returns 0 when everything passed, 1 otherwise.
int report_verification(const std::vector<CheckResult>& results, std::ostream& os);

}  // namespace catfam
