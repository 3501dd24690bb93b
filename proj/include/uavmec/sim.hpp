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

#ifndef UAVMEC_SIM_HPP_
#define UAVMEC_SIM_HPP_

// Slot-by-slot online control loop and the benchmark schemes.
//
// Per slot: the offloading game is played at the UAV's current position,
// the UD costs and UAV compute energy are charged there, the UAV then plans
// its next position, the propulsion energy of that move is charged, and
// finally the virtual energy queues are updated.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "uavmec/config.hpp"
#include "uavmec/game.hpp"
#include "uavmec/lyapunov.hpp"
#include "uavmec/model.hpp"
#include "uavmec/scenario.hpp"
#include "uavmec/trajectory.hpp"

namespace uavmec {

struct WorldState {
  std::size_t t = 0;
  Vec2 uav_position;
  EnergyQueues queues;  // backlogs at the start of slot t
};

struct SlotRecord {
  std::size_t t = 0;
  std::vector<double> ud_costs;  // C_m(t)
  OffloadProfile profile;
  double system_cost = 0.0;   // sum of ud_costs
  double e_compute = 0.0;     // J
  double e_propulsion = 0.0;  // J
  double workload = 0.0;      // cycles executed on the UAV
  double q_compute = 0.0;     // backlog after this slot's update
  double q_propulsion = 0.0;
  std::size_t offload_count = 0;
  Vec2 uav_position;  // where the UAV served this slot
  Vec2 next_position;
  std::size_t game_sweeps = 0;
  bool game_converged = true;
  std::size_t sca_iterations = 0;
  bool sca_converged = true;
  // L(Q(t+1)) - L(Q(t)) + V * C_s(t) and its per-slot upper bound.
  double drift_plus_penalty = 0.0;
  double drift_bound = 0.0;

  double e_total() const { return e_compute + e_propulsion; }
};

struct SlotDiagnostics {
  std::vector<GameTraceEntry> game_trace;
  std::vector<ScaTraceEntry> sca_trace;
};

struct SlotOutcome {
  SlotRecord record;
  WorldState next;
  SlotDiagnostics diagnostics;
};

// Runs one slot of `scheme`. `uds` are the UDs of slot world.t (ids equal
// indices).
SlotOutcome run_slot(SchemeKind scheme, const ScenarioConfig& cfg,
                     const std::vector<UdState>& uds, const WorldState& world);
// Same, with the drift bound constant W precomputed by the caller.
SlotOutcome run_slot(SchemeKind scheme, const ScenarioConfig& cfg,
                     const std::vector<UdState>& uds, const WorldState& world,
                     double drift_constant);

// Where the UAV starts under `scheme`.
Vec2 initial_uav_position(SchemeKind scheme, const ScenarioConfig& cfg);

struct Metrics {
  double time_average_ud_cost = 0.0;
  double time_average_uav_energy = 0.0;
  double time_average_workload = 0.0;
  double time_average_offload_count = 0.0;
  double final_q_compute = 0.0;
  double final_q_propulsion = 0.0;
  std::vector<double> ud_cost_series;
  std::vector<double> uav_energy_series;
  std::vector<double> workload_series;
};

// Mean of a series, accumulated in slot order.
double series_mean(const std::vector<double>& series);

Metrics compute_metrics(const std::vector<SlotRecord>& records);

struct Episode {
  SchemeKind scheme = SchemeKind::kOjoa;
  std::uint64_t seed = 0;
  std::vector<SlotRecord> records;
  Metrics metrics;
  std::vector<SlotDiagnostics> diagnostics;  // filled when traces are on
  std::string error;                         // non-empty if aborted
};

// Runs cfg.num_slots slots from zero queues. A slot-level exception aborts
// the episode; the records so far are kept and `error` holds the reason.
Episode run_episode(SchemeKind scheme, const ScenarioConfig& cfg,
                    std::uint64_t seed);
Episode run_episode(SchemeKind scheme, const ScenarioConfig& cfg,
                    const Scenario& scenario, std::uint64_t seed);

}  // namespace uavmec

#endif  // UAVMEC_SIM_HPP_
