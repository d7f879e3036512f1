#pragma once

#include <string>
#include <vector>

namespace percount::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

// Runs the full reproduction suite; deterministic, exact thresholds.
std::vector<CriterionResult> run_all();

}  // namespace percount::acceptance
