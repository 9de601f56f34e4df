// Runs the full verification suite and prints one pass/fail line per
// criterion; exits nonzero if any criterion fails.

#include <iostream>

#include "pmod/verify.hpp"

int main() {
  bool all = true;
  for (const pmod::CriterionResult& r : pmod::run_verification()) {
    std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name << ": " << r.detail << std::endl;
    all = all && r.pass;
  }
  return all ? 0 : 1;
}
