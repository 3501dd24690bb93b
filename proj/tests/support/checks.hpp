// Copyright 2026 The uavmec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef UAVMEC_TESTS_SUPPORT_CHECKS_HPP_
#define UAVMEC_TESTS_SUPPORT_CHECKS_HPP_

// The acceptance checks. Each returns a pass/fail verdict with a one-line
// explanation; the acceptance binary and `uavmec selftest` print them.

#include <functional>
#include <string>
#include <vector>

namespace uavmec::checks {

enum class Scale { kQuick, kFull };

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  double budget_seconds = 0.0;  // runtime limit of the criterion
};

CheckResult potential_identity(Scale scale);
CheckResult nash_certification(Scale scale);
CheckResult allocation_optimality(Scale scale);
CheckResult taylor_minorants(Scale scale);
CheckResult sca_behavior(Scale scale);
// Queue stability and the per-slot drift bound share one long simulation.
std::vector<CheckResult> queue_stability_and_drift_bound(Scale scale);
CheckResult scheme_ordering(Scale scale);
CheckResult data_size_trends(Scale scale);
CheckResult v_tradeoff(Scale scale);
CheckResult determinism(Scale scale);

// Criteria 1-5 and 11 (the fast mathematical and reproducibility checks).
std::vector<CheckResult> run_all(Scale scale);

// Every criterion, in order.
std::vector<CheckResult> run_acceptance(
    const std::function<void(const CheckResult&)>& on_result = {});

}  // namespace uavmec::checks

#endif  // UAVMEC_TESTS_SUPPORT_CHECKS_HPP_
