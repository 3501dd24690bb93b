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

#ifndef UAVMEC_EXPERIMENT_HPP_
#define UAVMEC_EXPERIMENT_HPP_

// Experiment driver: runs every (sweep point, scheme, seed) episode on a
// bounded worker pool, writes slots.csv / metrics.json / config_echo.txt and
// summarizes metrics files into a comparison table.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "uavmec/config.hpp"
#include "uavmec/sim.hpp"

namespace uavmec {

inline constexpr const char* kOutputDirEnv = "UAVMEC_OUTPUT_DIR";

struct JobResult {
  std::size_t sweep_index = 0;
  std::optional<double> sweep_value;
  Episode episode;
};

// The configuration of one sweep point (cfg itself when there is no sweep).
ScenarioConfig config_for_point(const ScenarioConfig& cfg,
                                std::optional<double> sweep_value);

// Runs all episodes; results are ordered by (sweep point, scheme, seed)
// regardless of the worker count.
std::vector<JobResult> run_jobs(const ScenarioConfig& cfg);

// cfg.output_dir unless the environment variable kOutputDirEnv is set.
std::filesystem::path resolve_output_dir(const ScenarioConfig& cfg);

void write_slots_csv(const std::vector<JobResult>& jobs, std::ostream& out);
std::string metrics_json(const ScenarioConfig& cfg,
                         const std::vector<JobResult>& jobs);

// Runs the experiment and writes its files. Returns 0 when every episode
// completed, 1 when at least one was aborted. I/O failures throw.
int run_experiment(const ScenarioConfig& cfg);

struct SummaryRow {
  std::string scheme;
  std::optional<double> sweep_value;
  std::size_t seeds = 0;
  double cost_mean = 0.0, cost_std = 0.0;
  double energy_mean = 0.0, energy_std = 0.0;
  double workload_mean = 0.0, workload_std = 0.0;
};

struct OrderingCheck {
  std::string name;
  std::optional<double> sweep_value;
  bool evaluated = false;  // false when scheme data is missing
  bool passed = false;
  std::string detail;
};

struct Summary {
  std::vector<SummaryRow> rows;
  std::vector<OrderingCheck> checks;
  std::string table;  // human-readable report

  bool all_passed() const;
};

// Mean and sample standard deviation (n - 1); zero spread for n < 2.
void mean_and_std(const std::vector<double>& values, double& mean, double& std);

// Aggregates metrics.json documents; throws std::runtime_error when a file
// cannot be read or parsed.
Summary summarize(const std::vector<std::filesystem::path>& metrics_files);
Summary summarize_json_text(const std::vector<std::string>& documents);

}  // namespace uavmec

#endif  // UAVMEC_EXPERIMENT_HPP_
