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

#include "uavmec/lyapunov.hpp"

#include <algorithm>
#include <cmath>

namespace uavmec {

EnergyQueues EnergyQueues::from_config(const ScenarioConfig& cfg) {
  EnergyQueues q;
  q.budget_compute = cfg.budget_compute();
  q.budget_propulsion = cfg.budget_propulsion();
  q.v_param = cfg.v_param;
  return q;
}

EnergyQueues update_queues(const EnergyQueues& q, double e_compute,
                           double e_propulsion) {
  EnergyQueues next = q;
  next.q_compute = std::max(q.q_compute + e_compute - q.budget_compute, 0.0);
  next.q_propulsion =
      std::max(q.q_propulsion + e_propulsion - q.budget_propulsion, 0.0);
  return next;
}

double lyapunov_value(const EnergyQueues& q) {
  return 0.5 * (q.q_compute * q.q_compute + q.q_propulsion * q.q_propulsion);
}

double drift_plus_penalty_objective(const EnergyQueues& q, double e_compute,
                                    double e_propulsion, double total_ud_cost) {
  return q.q_compute * e_compute + q.q_propulsion * e_propulsion +
         q.v_param * total_ud_cost;
}

double max_propulsion_power(const UavParams& p) {
  constexpr double kPitch = 1e-3;
  const auto steps = static_cast<long>(std::ceil(p.v_max / kPitch));
  double best_v = 0.0;
  double best = propulsion_power(0.0, p);
  for (long i = 1; i <= steps; ++i) {
    const double v = std::min(p.v_max, i * kPitch);
    const double power = propulsion_power(v, p);
    if (power > best) {
      best = power;
      best_v = v;
    }
  }
  // Golden-section search for the maximum inside the neighbouring cells.
  double lo = std::max(0.0, best_v - kPitch);
  double hi = std::min(p.v_max, best_v + kPitch);
  const double ratio = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = hi - ratio * (hi - lo);
  double b = lo + ratio * (hi - lo);
  double fa = propulsion_power(a, p);
  double fb = propulsion_power(b, p);
  for (int it = 0; it < 80 && hi - lo > 1e-12; ++it) {
    if (fa > fb) {
      hi = b;
      b = a;
      fb = fa;
      a = hi - ratio * (hi - lo);
      fa = propulsion_power(a, p);
    } else {
      lo = a;
      a = b;
      fa = fb;
      b = lo + ratio * (hi - lo);
      fb = propulsion_power(b, p);
    }
  }
  return std::max({best, fa, fb, propulsion_power(lo, p), propulsion_power(hi, p)});
}

double max_compute_energy(const ScenarioConfig& cfg) {
  return cfg.uav.varpi * static_cast<double>(cfg.num_uds) * cfg.intensity_max *
         cfg.data_size_max;
}

double max_propulsion_energy(const ScenarioConfig& cfg) {
  return cfg.tau * max_propulsion_power(cfg.uav);
}

double drift_bound_constant(double budget_compute, double max_compute,
                            double budget_propulsion, double max_propulsion) {
  const auto half_sq_max = [](double budget, double peak) {
    const double over = peak - budget;
    return 0.5 * std::max(budget * budget, over * over);
  };
  return half_sq_max(budget_compute, max_compute) +
         half_sq_max(budget_propulsion, max_propulsion);
}

double drift_bound_constant(const ScenarioConfig& cfg) {
  return drift_bound_constant(cfg.budget_compute(), max_compute_energy(cfg),
                              cfg.budget_propulsion(), max_propulsion_energy(cfg));
}

double drift_bound_rhs(const EnergyQueues& q, double w_constant,
                       double e_compute, double e_propulsion,
                       double total_ud_cost) {
  return w_constant + q.q_compute * (e_compute - q.budget_compute) +
         q.q_propulsion * (e_propulsion - q.budget_propulsion) +
         q.v_param * total_ud_cost;
}

}  // namespace uavmec
