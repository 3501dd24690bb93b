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

#ifndef UAVMEC_TESTS_SUPPORT_ORACLES_HPP_
#define UAVMEC_TESTS_SUPPORT_ORACLES_HPP_

// Reference computations used to check the library. They deliberately take
// different routes from the production code: enumeration instead of better
// responses, a generic constrained Newton method instead of the closed-form
// split, and dense grid search instead of successive convex approximation.

#include <cstddef>
#include <vector>

#include "uavmec/game.hpp"
#include "uavmec/trajectory.hpp"

namespace uavmec::testing {

// Propulsion power written out directly (no cancellation-free rewrite).
double naive_propulsion_power(double speed, const UavParams& p);

// Minimizes sum_i c_i / x_i over the open simplex by Newton's method on the
// equality-constrained problem, started from the uniform point.
std::vector<double> simplex_newton(const std::vector<double>& c);

// Coefficients of the separable edge cost sum a_m / s_m + b_m / w_m.
struct EdgeCoefficients {
  std::vector<double> compute;    // a_m
  std::vector<double> bandwidth;  // b_m
};
EdgeCoefficients edge_coefficients(const std::vector<OffloaderInput>& set,
                                   const ResourcePool& pool);

// Utilities of every UD under `profile`, computed from the model formulas
// with the numeric allocation. Offloaders missing the deadline are flagged.
struct ProfileEvaluation {
  std::vector<double> utility;
  bool feasible = true;
};
ProfileEvaluation evaluate_profile(const GameContext& ctx,
                                   const OffloadProfile& profile);

// All pure Nash equilibria of the deadline-constrained game, by checking
// every unilateral deviation of every one of the 2^M profiles. A deviation
// to the edge that makes the profile infeasible is unavailable.
std::vector<OffloadProfile> brute_force_equilibria(const GameContext& ctx,
                                                   double rel_tol = 1e-9);

struct GridOptimum {
  Vec2 position;
  double value = 0.0;
};

// Dense grid over the speed disk (pitch `pitch`) followed by a shrinking
// compass search from the best grid points.
GridOptimum grid_minimize_p2(const TrajectoryProblem& prob, double pitch = 0.05);

// Surrogate objective of the subproblem around `iterate` at `candidate`
// with tight slacks: y from bisection on C3 / y^2 = f_lower, z = g_lower.
// Returns +inf where some g_lower is not positive.
double surrogate_value(Vec2 candidate, const ScaIterate& iterate,
                       const TrajectoryProblem& prob);

GridOptimum grid_minimize_surrogate(const ScaIterate& iterate,
                                    const TrajectoryProblem& prob,
                                    double pitch = 0.05);

}  // namespace uavmec::testing

#endif  // UAVMEC_TESTS_SUPPORT_ORACLES_HPP_
