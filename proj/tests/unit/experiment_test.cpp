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

#include <sstream>
#include <string>

#include "doctest.h"
#include "uavmec/experiment.hpp"

namespace uavmec {
namespace {

std::string doc(const std::string& episodes) {
  return R"({"sweep_key": "", "episodes": [)" + episodes + "]}";
}

std::string ep(const std::string& scheme, double cost, double energy, double work,
               const std::string& sweep = "null", const std::string& status = "ok") {
  std::ostringstream s;
  s << R"({"scheme": ")" << scheme << R"(", "seed": 1, "sweep_value": )" << sweep
    << R"(, "status": ")" << status << R"(", "time_average_ud_cost": )" << cost
    << R"(, "time_average_uav_energy": )" << energy
    << R"(, "time_average_workload": )" << work << "}";
  return s.str();
}

TEST_CASE("mean and sample std") {
  double m = 0, s = 0;
  mean_and_std({1.0, 2.0, 3.0, 4.0}, m, s);
  CHECK(m == 2.5);
  CHECK(s == doctest::Approx(1.2909944487358056));
  mean_and_std({5.0}, m, s);
  CHECK(m == 5.0);
  CHECK(s == 0.0);
}

TEST_CASE("summary ordering checks") {
  const std::string all = ep("OJOA", 1, 10, 5) + "," + ep("FLP", 2, 10, 5) + "," +
                          ep("OCQ", 3, 10, 5) + "," + ep("ERA", 4, 10, 1) + "," +
                          ep("ELC", 5, 10, 0);
  const Summary ok = summarize_json_text({doc(all)});
  REQUIRE(ok.checks.size() == 2);
  CHECK(ok.all_passed());

  const Summary bad = summarize_json_text(
      {doc(ep("OJOA", 3, 10, 5) + "," + ep("FLP", 2, 10, 5) + "," + ep("OCQ", 3.5, 10, 5) +
           "," + ep("ERA", 4, 10, 6) + "," + ep("ELC", 5, 10, 0))});
  CHECK_FALSE(bad.all_passed());
  CHECK(bad.table.find("FAIL") != std::string::npos);

  const Summary gap = summarize_json_text({doc(ep("OJOA", 1, 10, 5) + "," + ep("ELC", 5, 10, 0))});
  CHECK(gap.table.find("FLP  0  [no data]") != std::string::npos);
  CHECK(gap.table.find("SKIP") != std::string::npos);
  CHECK_FALSE(gap.checks.front().evaluated);
}

TEST_CASE("summary pools files and skips aborted episodes") {
  const Summary s = summarize_json_text(
      {doc(ep("OJOA", 1, 10, 5, "0.2") + "," + ep("OJOA", 3, 12, 5, "0.2")),
       doc(ep("OJOA", 100, 10, 5, "0.2", "error") + "," + ep("OJOA", 7, 10, 5, "0.4"))});
  REQUIRE(s.rows.size() == 2);
  CHECK(*s.rows[0].sweep_value == 0.2);
  CHECK(s.rows[0].seeds == 2);
  CHECK(s.rows[0].cost_mean == 2.0);
  CHECK(s.rows[0].energy_std == doctest::Approx(1.4142135623730951));
  CHECK(s.rows[1].cost_mean == 7.0);
}

TEST_CASE("jobs and CSV output") {
  ScenarioConfig cfg;
  cfg.num_uds = 4;
  cfg.num_slots = 5;
  cfg.seeds = {1};
  cfg.schemes = {SchemeKind::kElc};
  const std::vector<JobResult> jobs = run_jobs(cfg);
  REQUIRE(jobs.size() == 1);
  std::ostringstream csv;
  write_slots_csv(jobs, csv);
  const std::string text = csv.str();
  CHECK(text.rfind("scheme,seed,sweep_value,t,C_s,E_c,E_p,workload,Q_c,Q_p,offload_count,"
                   "uav_x,uav_y\n",
                   0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 6);
  CHECK(text.find("\nELC,1,") != std::string::npos);

  const Summary s = summarize_json_text({metrics_json(cfg, jobs)});
  REQUIRE(s.rows.size() == 1);
  CHECK(s.rows[0].scheme == "ELC");
  CHECK(s.rows[0].cost_mean == doctest::Approx(jobs[0].episode.metrics.time_average_ud_cost));
}

TEST_CASE("sweep points") {
  ScenarioConfig cfg;
  cfg.sweep_key = "lyapunov.V";
  cfg.sweep_values = {5, 500};
  CHECK(config_for_point(cfg, 500.0).v_param == 500.0);
  CHECK(config_for_point(cfg, std::nullopt).v_param == cfg.v_param);
}

}  // namespace
}  // namespace uavmec
