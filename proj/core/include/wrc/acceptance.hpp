#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wrc {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string details;
  double seconds = 0;
};

struct AcceptanceOptions {
  unsigned workers = 1;
  // empty = run everything; otherwise the listed criterion ids
  std::vector<int> only;
};

/// Runs the full verification suite: group invariants, wreath lemma sweeps,
/// counting-function asymptotics, discriminant identities, analytic
/// consistency. One pass/fail line per criterion is written to `live` as
/// results arrive.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt,
                                            std::ostream* live = nullptr);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace wrc
