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

#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "uavmec/lyapunov.hpp"

namespace uavmec {
namespace {

constexpr double kPowerAt30 = 356.2981405896267587747718747880710800106;

EnergyQueues queues(double qc, double qp, double bc, double bp) {
  EnergyQueues q;
  q.q_compute = qc;
  q.q_propulsion = qp;
  q.budget_compute = bc;
  q.budget_propulsion = bp;
  return q;
}

TEST_CASE("queue update") {
  CHECK(update_queues(queues(5, 0, 4, 1), 3, 0).q_compute == 4.0);
  CHECK(update_queues(queues(0, 0, 5, 1), 2, 0).q_compute == 0.0);
  CHECK(update_queues(queues(10, 0, 4, 1), 10, 0).q_compute == 16.0);
  CHECK(update_queues(queues(0, 5, 1, 4), 0, 3).q_propulsion == 4.0);
  // Monotone in the arriving energy.
  double prev = -1;
  for (double e = 0; e < 20; e += 0.5) {
    const double q = update_queues(queues(3, 3, 4, 4), e, e).q_compute;
    CHECK(q >= prev);
    prev = q;
  }
}

TEST_CASE("lyapunov value and drift-plus-penalty") {
  CHECK(lyapunov_value(queues(0, 0, 1, 1)) == 0.0);
  CHECK(lyapunov_value(queues(3, 4, 1, 1)) == 12.5);
  CHECK(lyapunov_value(queues(2, 7, 1, 1)) == lyapunov_value(queues(7, 2, 1, 1)));
  EnergyQueues q = queues(0, 0, 1, 1);
  q.v_param = 10;
  CHECK(drift_plus_penalty_objective(q, 5, 5, 3) == 30.0);
  q = queues(2, 1, 1, 1);
  q.v_param = 1;
  CHECK(drift_plus_penalty_objective(q, 5, 4, 0) == 14.0);
  q.v_param = 2;
  CHECK(drift_plus_penalty_objective(q, 5, 4, 3) == 14.0 + 6.0);
}

TEST_CASE("drift bound constant") {
  CHECK(drift_bound_constant(5, 10, 7, 14) == doctest::Approx((100.0 + 196.0) / 8.0));
  CHECK(drift_bound_constant(0, 10, 7, 14) == doctest::Approx(50.0 + 49.0 / 2.0));
  const ScenarioConfig cfg;
  CHECK(max_compute_energy(cfg) == doctest::Approx(30.0));
  CHECK(max_propulsion_power(cfg.uav) == doctest::Approx(kPowerAt30).epsilon(1e-12));
  // Independently: 0.5 * max(33^2, 3^2) + 0.5 * max(187^2, (P(30) - 187)^2).
  CHECK(drift_bound_constant(cfg) == doctest::Approx(18029.0).epsilon(1e-12));
}

TEST_CASE("per-slot bound holds for arbitrary energies") {
  const ScenarioConfig cfg;
  const double w = drift_bound_constant(cfg);
  EnergyQueues q = EnergyQueues::from_config(cfg);
  CHECK(q.budget_compute + q.budget_propulsion == doctest::Approx(cfg.energy_budget));
  const double pmax = max_propulsion_power(cfg.uav);
  for (int i = 0; i < 200; ++i) {
    const double ec = 30.0 * ((i * 37) % 101) / 100.0;
    const double ep = testing::naive_propulsion_power(30.0 * ((i * 53) % 97) / 96.0, cfg.uav);
    REQUIRE(ep <= pmax + 1e-9);
    const EnergyQueues next = update_queues(q, ec, ep);
    const double lhs = lyapunov_value(next) - lyapunov_value(q);
    CHECK(lhs <= drift_bound_rhs(q, w, ec, ep, 0.0) + 1e-9);
    q = next;
  }
}

}  // namespace
}  // namespace uavmec
