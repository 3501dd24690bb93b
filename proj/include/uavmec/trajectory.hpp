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

#ifndef UAVMEC_TRAJECTORY_HPP_
#define UAVMEC_TRAJECTORY_HPP_

// Next-position planning for the UAV by successive convex approximation.
//
// The exact per-slot objective is
//
//   Q_p * P(v) * tau + V * sum_m c_m / (w_m * B * g_m(P')),
//
// with v = |P' - P_u| / tau, c_m = gamma_m D_m + (1 - gamma_m) P_m D_m and
// g_m the spectral efficiency of UD m at P'. The induced-power term and the
// 1/g_m terms are non-convex; both are moved into slack constraints
//
//   C3 / y^2 <= y^2 + v^2,      z_m <= g_m(P'),
//
// whose right-hand sides are replaced by first-order minorants around the
// current local point. Each convex surrogate is solved exactly in P' after
// substituting the tight slacks (z_m equal to the minorant, y the positive
// root of a cubic), using a log-barrier Newton method over the speed disk.

#include <cstddef>
#include <vector>

#include "uavmec/model.hpp"

namespace uavmec {

struct TrajectoryOffloader {
  Vec2 position;                // UD position
  double cost_weight = 0.0;     // gamma D + (1 - gamma) P D
  double bandwidth_share = 0.0; // w_m from stage 1
  double snr_scale = 0.0;       // SNR numerator, held fixed while planning
};

struct TrajectoryProblem {
  Vec2 current_position;
  std::vector<TrajectoryOffloader> offloaders;
  double q_propulsion = 0.0;
  double v_param = 1.0;
  UavParams uav;
  ChannelParams channel;
  double tau = 1.0;

  double radius() const { return uav.v_max * tau; }
  void validate() const;
};

struct ScaIterate {
  Vec2 local_point;
  double y_local = 0.0;
  double objective_value = 0.0;
  std::size_t iteration = 0;
};

// Exact (unrelaxed) planning objective. Throws std::invalid_argument when
// the candidate lies outside the speed disk (1e-9 m tolerance).
double p2_objective(Vec2 candidate, const TrajectoryProblem& prob);

// sqrt(sqrt(C3 + |d|^4 / (4 tau^4)) - |d|^2 / (2 tau^2)), d = local - current.
double y_anchor(Vec2 local_point, Vec2 current_position, double tau, double c3);

// Tangent-plane minorant of y^2 + |P' - P_u|^2 / tau^2 at (local point, y_l).
double f_lower(Vec2 candidate, double y, const ScaIterate& iterate,
               Vec2 current_position, double tau);

// Spectral efficiency of offloader m at `candidate`.
double g_value(Vec2 candidate, const TrajectoryOffloader& o, double height,
               double mu);

// Concave minorant of g_m, tangent at the local point.
double g_lower(Vec2 candidate, std::size_t m, const ScaIterate& iterate,
               const TrajectoryProblem& prob);

struct SubproblemSolution {
  Vec2 position;
  double y = 0.0;
  std::vector<double> z;
  double objective = 0.0;
  bool converged = false;
  std::size_t newton_steps = 0;
};

// Minimizes the convex surrogate around `iterate` over (P', y, z). On solver
// failure returns the local point with its surrogate value and
// converged = false. Requires a non-empty offloader set.
SubproblemSolution solve_subproblem(const ScaIterate& iterate,
                                    const TrajectoryProblem& prob);

struct ScaTraceEntry {
  std::size_t iteration = 0;
  double surrogate_objective = 0.0;  // G^(l)
  double exact_objective = 0.0;      // p2_objective at the new local point
  Vec2 position;
  double y = 0.0;
  double y_residual = 0.0;  // |C3 / y^2 - f_lower|
  double z_residual = 0.0;  // max_m |z_m - g_lower_m|
};

struct Stage2Options {
  double epsilon = 0.01;
  std::size_t max_iterations = 100;
  // Also run the SCA from a point at the minimum-power speed, which avoids
  // stalling at hover (a stationary point of the propulsion power).
  bool endurance_start = true;
};

struct Stage2Result {
  Vec2 position;
  std::size_t iterations = 0;  // of the selected run
  bool converged = false;
  std::size_t start = 0;  // 0: current position, 1: endurance start
  std::vector<ScaTraceEntry> trace;
};

// SCA from `start` with G^(0) = 0 until |G^(l) - G^(l-1)| < epsilon. When
// the iteration cap is hit the best iterate by exact objective is returned.
Stage2Result run_sca(const TrajectoryProblem& prob, Vec2 start,
                     const Stage2Options& options = {});

// Speed in [0, v_max] minimizing the propulsion power.
double min_power_speed(const UavParams& p);

// Start on the circle of radius min_power_speed * tau around P_u, in the
// steepest-descent direction of the communication term (+x if that vanishes).
Vec2 endurance_start(const TrajectoryProblem& prob);

// SCA from P^(0) = P_u and, if enabled, from the endurance start; returns
// the run with the lower exact objective (ties keep P_u). An empty offloader
// set keeps the UAV in place.
Stage2Result solve_stage2(const TrajectoryProblem& prob,
                          const Stage2Options& options = {});

}  // namespace uavmec

#endif  // UAVMEC_TRAJECTORY_HPP_
