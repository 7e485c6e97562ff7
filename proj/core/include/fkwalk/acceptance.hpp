#pragma once

#include <string>
#include <vector>

namespace fkwalk {

/// Outcome of one acceptance criterion. `artifacts` holds the serialized
/// result documents produced while checking it; reruns with a different
/// worker count must reproduce them byte for byte.
struct CriterionResult {
  int index = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  std::vector<std::string> artifacts;
};

struct AcceptanceOptions {
  int workers = 8;
};

/// Runs the full acceptance suite. Tolerances are pinned inside; results
/// come back in criterion order, one entry per criterion.
std::vector<CriterionResult> run_acceptance_suite(const AcceptanceOptions& opt = {});

/// "ok  3 binned line vs gaussian kernel (12.3 s): ..." style summary line.
std::string format_criterion_line(const CriterionResult& r);

}  // namespace fkwalk
