#pragma once
// Self-contained verification suite: each criterion exercises one documented
// guarantee of the library end to end and reports pass/fail with a detail
// string locating the first failure.

#include <string>
#include <vector>

namespace pmod {

struct CriterionResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

std::vector<CriterionResult> run_verification();

}  // namespace pmod
