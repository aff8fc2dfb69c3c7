#pragma once
// The release gate: one self-contained check per shipping claim, each
// returning a pass/fail verdict with a short numeric summary.  Shared by the
// standalone acceptance runner and the `gmk reproduce` subcommand.

#include <string>
#include <vector>

namespace gmk::acceptance {

struct CriterionResult {
  std::string id;
  bool pass = false;
  std::string detail;
};

// Stable, ordered list of criterion ids.
const std::vector<std::string>& criterion_ids();

// Run one criterion by exact id; throws std::invalid_argument on unknown ids.
CriterionResult run_criterion(const std::string& id);

// Run every criterion whose id contains `filter` (empty selects all) using up
// to `threads` workers (0 = hardware concurrency).  Results come back in id
// order regardless of scheduling, so output is deterministic.
std::vector<CriterionResult> run_selected(const std::string& filter, int threads);

// "PASS <id> -- <detail>" / "FAIL <id> -- <detail>".
std::string format_result(const CriterionResult& r);

}  // namespace gmk::acceptance
