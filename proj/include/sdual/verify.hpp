#pragma once

#include <string>
#include <vector>

namespace sdual {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::vector<std::string> details;  // one line per check, failures prefixed "FAIL"
  double seconds = 0;
};

inline constexpr int kCriterionCount = 10;

/// Runs acceptance criterion 1..10. Exceptions become failures.
CriterionResult run_criterion(int id);

std::vector<CriterionResult> run_all_criteria();

}  // namespace sdual
