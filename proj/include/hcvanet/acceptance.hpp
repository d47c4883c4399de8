#ifndef HCVANET_ACCEPTANCE_HPP
#define HCVANET_ACCEPTANCE_HPP

#include <string>
#include <vector>

namespace hcvanet {

// One end-to-end validation scenario. Tolerances are pinned in the runner;
// `detail` carries every measured number so a failure is diagnosable from the
// log alone.
struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

inline constexpr int kNumCriteria = 9;

CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_all_criteria();

}  // namespace hcvanet

#endif
