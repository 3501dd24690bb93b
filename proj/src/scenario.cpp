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

#include "uavmec/scenario.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "uavmec/mobility.hpp"

namespace uavmec {
namespace {

enum Stream : std::uint32_t { kAttributes = 1, kMobility = 2, kTasks = 3 };

std::mt19937_64 make_engine(std::uint64_t seed, Stream stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream)};
  return std::mt19937_64(seq);
}

}  // namespace

Task Scenario::task(std::size_t t, std::size_t m) const {
  const TaskDraw& d = tasks_[t][m];
  Task task;
  task.data_bits = data_size_min_ + d.data_unit * (data_size_max_ - data_size_min_);
  task.intensity =
      intensity_min_ + d.intensity_unit * (intensity_max_ - intensity_min_);
  task.deadline = deadline_;
  return task;
}

std::vector<UdState> Scenario::uds_at(std::size_t t) const {
  std::vector<UdState> uds(num_uds());
  for (std::size_t m = 0; m < uds.size(); ++m) {
    uds[m].id = m;
    uds[m].position = positions_[t][m];
    uds[m].velocity = velocities_[t][m];
    uds[m].params = params_[m];
    uds[m].task = task(t, m);
  }
  return uds;
}

Scenario generate_scenario(const ScenarioConfig& cfg, std::uint64_t seed) {
  const std::size_t n = cfg.num_uds;
  const std::size_t slots = cfg.num_slots;
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  Scenario sc;
  sc.data_size_min_ = cfg.data_size_min;
  sc.data_size_max_ = cfg.data_size_max;
  sc.intensity_min_ = cfg.intensity_min;
  sc.intensity_max_ = cfg.intensity_max;
  sc.deadline_ = cfg.deadline;

  std::mt19937_64 attr = make_engine(seed, kAttributes);
  std::uniform_int_distribution<std::size_t> pick(0, cfg.f_local_choices.size() - 1);
  std::vector<Vec2> start(n);
  for (std::size_t m = 0; m < n; ++m) {
    UdParams p;
    p.f_local = cfg.f_local_choices[pick(attr)];
    p.tx_power = cfg.tx_power;
    p.kappa_eff = cfg.kappa_eff;
    p.gamma = cfg.gamma_min + unit(attr) * (cfg.gamma_max - cfg.gamma_min);
    const double speed = unit(attr) * cfg.mean_speed_max;
    const double heading = 2.0 * std::numbers::pi * unit(attr);
    sc.params_.push_back(p);
    sc.mean_velocity_.push_back({speed * std::cos(heading), speed * std::sin(heading)});
    start[m] = {unit(attr) * cfg.area.width, unit(attr) * cfg.area.height};
  }

  std::mt19937_64 mob = make_engine(seed, kMobility);
  std::normal_distribution<double> noise(0.0, cfg.mobility_sigma);
  sc.positions_.assign(slots, std::vector<Vec2>(n));
  sc.velocities_.assign(slots, std::vector<Vec2>(n));
  for (std::size_t m = 0; m < n; ++m) {
    MobilityParams mp;
    mp.alpha = cfg.mobility_alpha;
    mp.mean_velocity = sc.mean_velocity_[m];
    mp.sigma = cfg.mobility_sigma;
    mp.area = cfg.area;
    Vec2 pos = start[m];
    Vec2 vel = mp.mean_velocity;
    for (std::size_t t = 0; t < slots; ++t) {
      if (t > 0) {
        const double nx = noise(mob);
        const double ny = noise(mob);
        vel = step_velocity(vel, mp, {nx, ny});
        const MobilityStep step = step_position(pos, vel, cfg.tau, cfg.area);
        pos = step.position;
        vel = step.velocity;
      }
      sc.positions_[t][m] = pos;
      sc.velocities_[t][m] = vel;
    }
  }

  std::mt19937_64 tasks = make_engine(seed, kTasks);
  sc.tasks_.assign(slots, std::vector<TaskDraw>(n));
  for (std::size_t t = 0; t < slots; ++t) {
    for (std::size_t m = 0; m < n; ++m) {
      sc.tasks_[t][m].data_unit = unit(tasks);
      sc.tasks_[t][m].intensity_unit = unit(tasks);
    }
  }
  return sc;
}

}  // namespace uavmec
