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

#ifndef UAVMEC_LYAPUNOV_HPP_
#define UAVMEC_LYAPUNOV_HPP_

// Virtual energy queues and the per-slot drift-plus-penalty quantities that
// turn the long-term UAV energy budget into per-slot weights.

#include "uavmec/config.hpp"
#include "uavmec/model.hpp"

namespace uavmec {

struct EnergyQueues {
  double q_compute = 0.0;     // J
  double q_propulsion = 0.0;  // J
  double budget_compute = 0.0;     // J per slot
  double budget_propulsion = 0.0;  // J per slot
  double v_param = 1.0;            // cost/backlog trade-off weight

  static EnergyQueues from_config(const ScenarioConfig& cfg);
};

// max{Q + E - budget, 0} for both queues.
EnergyQueues update_queues(const EnergyQueues& q, double e_compute,
                           double e_propulsion);

// (Q_c^2 + Q_p^2) / 2.
double lyapunov_value(const EnergyQueues& q);

// Q_c * E_c + Q_p * E_p + V * total_ud_cost.
double drift_plus_penalty_objective(const EnergyQueues& q, double e_compute,
                                    double e_propulsion, double total_ud_cost);

// Maximum of the propulsion power over [0, v_max]: 1e-3 m/s grid followed by
// golden-section refinement around the best grid cell.
double max_propulsion_power(const UavParams& p);

// Worst-case per-slot energies used by the drift bound.
double max_compute_energy(const ScenarioConfig& cfg);
double max_propulsion_energy(const ScenarioConfig& cfg);

// Constant W of the per-slot drift bound.
double drift_bound_constant(const ScenarioConfig& cfg);
double drift_bound_constant(double budget_compute, double max_compute,
                            double budget_propulsion, double max_propulsion);

// Right-hand side W + Q_c(E_c - budget_c) + Q_p(E_p - budget_p) + V * cost.
double drift_bound_rhs(const EnergyQueues& q, double w_constant,
                       double e_compute, double e_propulsion,
                       double total_ud_cost);

}  // namespace uavmec

#endif  // UAVMEC_LYAPUNOV_HPP_
