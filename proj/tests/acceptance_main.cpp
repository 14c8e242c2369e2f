// Acceptance suite: runs every verification check and prints one line per
// check plus a rollup per criterion. Exits nonzero when any criterion fails.

#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "bergman/verify.hpp"

int main() {
  using bergman::verify::CheckResult;
  const std::vector<CheckResult> checks =
      bergman::verify::run_suite(bergman::verify::Suite::All, 1.0);

  std::map<int, bool> criterion_pass;
  for (const CheckResult& c : checks) {
    std::printf("[%s] %-34s observed=%-12.4e threshold=%-12.4e %s\n",
                c.pass ? "PASS" : "FAIL", c.name.c_str(), c.observed, c.threshold,
                c.metric.c_str());
    if (!c.note.empty()) std::printf("       note: %s\n", c.note.c_str());
    if (c.criterion > 0) {
      auto [it, inserted] = criterion_pass.try_emplace(c.criterion, c.pass);
      if (!inserted) it->second = it->second && c.pass;
    }
  }

  int failures = 0;
  std::printf("----\n");
  for (const auto& [criterion, pass] : criterion_pass) {
    std::printf("criterion %2d: %s\n", criterion, pass ? "PASS" : "FAIL");
    if (!pass) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criterion_pass.size()) - failures,
              criterion_pass.size());
  return failures;
}
