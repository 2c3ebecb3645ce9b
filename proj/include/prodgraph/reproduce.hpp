#pragma once

#include <string>
#include <vector>

#include "prodgraph/spectra.hpp"

namespace prodgraph {

/// One re-derived claim: what was computed, what was required, and whether
/// the recorded comparison rule held.
struct ClaimResult {
  std::string id;
  std::string anchor;     // claim family
  std::string criterion;  // acceptance criterion the claim belongs to
  std::string rule;       // comparison rule behind the pass flag
  std::string computed;
  std::string expected;
  bool pass = false;
  double elapsed_ms = 0;
};

struct Report {
  int max_n = 13;
  double tol = kDefaultSpectralTol;
  std::vector<ClaimResult> claims;  // sorted by id, ids unique

  bool all_pass() const;
};

/// Runs the claim suite. Families parameterized by an odd cycle length n
/// are capped at max_n (<= 13); fixed-corpus claims always run in full.
/// A nonempty id_prefix restricts the run to claims whose id starts with
/// it. Deterministic for a given (max_n, tol) up to elapsed times.
Report run_claims(int max_n = 13, double tol = kDefaultSpectralTol,
                  const std::string& id_prefix = "");

std::string report_to_json(const Report& report);

struct Criterion {
  std::string id;           // "A1".."A11"
  std::string description;
  double time_budget_ms;    // 0 = untimed
};

/// The acceptance criteria, in order, with their runtime budgets.
const std::vector<Criterion>& acceptance_criteria();

}  // namespace prodgraph
