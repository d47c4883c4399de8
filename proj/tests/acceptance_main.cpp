// Acceptance gate: runs the numbered criteria and prints one line each.
// Usage: acceptance [N]   (N in 1..9; no argument runs all)
// Exit code is the number of failing criteria.

#include <cstdio>
#include <cstdlib>
#include <exception>

#include "hcvanet/acceptance.hpp"

int main(int argc, char** argv) {
  using hcvanet::CriterionResult;
  std::vector<CriterionResult> results;
  try {
    if (argc > 1) {
      const int id = std::atoi(argv[1]);
      if (id < 1 || id > hcvanet::kNumCriteria) {
        std::fprintf(stderr, "criterion id must be 1..%d\n",
                     hcvanet::kNumCriteria);
        return 64;
      }
      results.push_back(hcvanet::run_criterion(id));
    } else {
      results = hcvanet::run_all_criteria();
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "acceptance run aborted: %s\n", e.what());
    return 70;
  }

  int failures = 0;
  for (const auto& r : results) {
    failures += r.pass ? 0 : 1;
    std::printf("[%s] criterion %d: %s | %s (%.1fs)\n",
                r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.detail.c_str(), r.seconds);
  }
  std::fflush(stdout);
  return failures;
}
