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

#ifndef UAVMEC_SCENARIO_HPP_
#define UAVMEC_SCENARIO_HPP_

// Random scenario generation. Every random quantity of an episode is drawn
// up front from a seed, so all schemes run on the same UD trajectories and
// task streams. Static attributes, mobility noise and tasks come from three
// independent generator streams; tasks are stored as raw uniforms and scaled
// at lookup time, so changing a task range keeps the underlying draws.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "uavmec/config.hpp"
#include "uavmec/model.hpp"

namespace uavmec {

struct TaskDraw {
  double data_unit = 0.0;       // uniform in [0, 1)
  double intensity_unit = 0.0;  // uniform in [0, 1)
};

class Scenario {
 public:
  std::size_t num_uds() const { return params_.size(); }
  std::size_t num_slots() const { return positions_.size(); }

  const UdParams& params(std::size_t m) const { return params_[m]; }
  Vec2 mean_velocity(std::size_t m) const { return mean_velocity_[m]; }
  Vec2 position(std::size_t t, std::size_t m) const { return positions_[t][m]; }
  Vec2 velocity(std::size_t t, std::size_t m) const { return velocities_[t][m]; }
  Task task(std::size_t t, std::size_t m) const;

  // Snapshot of all UDs at slot t (ids equal indices).
  std::vector<UdState> uds_at(std::size_t t) const;

 private:
  friend Scenario generate_scenario(const ScenarioConfig& cfg,
                                    std::uint64_t seed);

  double data_size_min_ = 0.0, data_size_max_ = 0.0;
  double intensity_min_ = 0.0, intensity_max_ = 0.0;
  double deadline_ = 0.0;
  std::vector<UdParams> params_;
  std::vector<Vec2> mean_velocity_;
  std::vector<std::vector<Vec2>> positions_;
  std::vector<std::vector<Vec2>> velocities_;
  std::vector<std::vector<TaskDraw>> tasks_;
};

Scenario generate_scenario(const ScenarioConfig& cfg, std::uint64_t seed);

}  // namespace uavmec

#endif  // UAVMEC_SCENARIO_HPP_
