// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace gfconj {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct AcceptanceOptions {
  // Percentage of the full instance counts; 100 reproduces the acceptance run.
  int budget_percent = 100;
  std::uint64_t seed = 20240601;
  // Criteria to run (empty: all ten).
  std::vector<int> only;
};

// Runs the acceptance criteria in order, reporting each as it finishes.
std::vector<CriterionResult> run_acceptance(
    const AcceptanceOptions& opts,
    const std::function<void(const CriterionResult&)>& on_result = {});

// "PASS  3  pell fundamental solution: ..." one line, no timing.
std::string format_result(const CriterionResult& r);

}  // namespace gfconj
