// Runs every acceptance criterion and prints one PASS/FAIL line each.
// Exits nonzero when any criterion fails.

#include <cstdio>

#include "fkwalk/acceptance.hpp"

int main() {
  fkwalk::AcceptanceOptions opt;
  opt.workers = 8;
  bool all = true;
  for (const fkwalk::CriterionResult& r : fkwalk::run_acceptance_suite(opt)) {
    std::puts(fkwalk::format_criterion_line(r).c_str());
    std::fflush(stdout);
    all = all && r.pass;
  }
  std::puts(all ? "all criteria passed" : "criteria FAILED");
  return all ? 0 : 1;
}
