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

#ifndef UAVMEC_GAME_HPP_
#define UAVMEC_GAME_HPP_

// Multi-UD task offloading game. Each UD picks local execution or offloading
// to the UAV; offloaders share the UAV's resources through the selected
// allocation policy, and the UAV's compute energy is priced at Q_c / V.
// Under the optimal allocation the game admits an exact potential, so
// asynchronous better responses terminate in a pure Nash equilibrium.

#include <cstddef>
#include <limits>
#include <vector>

#include "uavmec/allocation.hpp"
#include "uavmec/config.hpp"
#include "uavmec/lyapunov.hpp"
#include "uavmec/model.hpp"

namespace uavmec {

using OffloadProfile = OffloadVector;

struct GameContext {
  std::vector<UdState> uds;  // indexed by position; ids must equal indices
  Vec2 uav_position;
  EnergyQueues queues;  // only Q_c / V enters the utilities
  ChannelParams channel;
  UavParams uav;
  AllocationPolicy policy = AllocationPolicy::kOptimal;
};

inline constexpr double kInfeasible = std::numeric_limits<double>::infinity();

struct EdgeOption {
  double utility = kInfeasible;
  double delay = kInfeasible;
  double cost = kInfeasible;  // gamma * T_ec + (1 - gamma) * E_ec
};

class OffloadingGame {
 public:
  explicit OffloadingGame(GameContext ctx);

  std::size_t size() const { return ctx_.uds.size(); }
  const GameContext& context() const { return ctx_; }
  double compute_price() const { return price_; }
  const OffloaderInput& offloader(std::size_t m) const { return inputs_[m]; }
  const OffloadWeights& weights(std::size_t m) const { return weights_[m]; }
  ResourcePool pool() const { return pool_; }

  double utility_local(std::size_t m) const { return local_utility_[m]; }

  // Outcome for UD m when it offloads and every other UD keeps its entry of
  // `profile`. Zero shares (degenerate weights) yield an infinite option.
  EdgeOption edge_option(std::size_t m, const OffloadProfile& profile) const;
  double utility_edge(std::size_t m, const OffloadProfile& profile) const {
    return edge_option(m, profile).utility;
  }

  // Utility of UD m under its own entry of `profile`.
  double utility(std::size_t m, const OffloadProfile& profile) const;

  // Every offloader meets its deadline under the induced allocation.
  bool feasible(const OffloadProfile& profile) const;

  // Potential over the fixed UD index order.
  double potential(const OffloadProfile& profile) const;

  // Allocation over the offloaders of `profile` (empty for all-local).
  Allocation allocation(const OffloadProfile& profile) const;

 private:
  std::vector<OffloaderInput> offloaders_of(const OffloadProfile& profile) const;

  GameContext ctx_;
  ResourcePool pool_;
  double price_ = 0.0;
  std::vector<OffloaderInput> inputs_;
  std::vector<OffloadWeights> weights_;
  std::vector<double> local_utility_;
};

struct GameTraceEntry {
  std::size_t sweep = 0;
  std::size_t mover = 0;
  int decision = 0;  // adopted strategy
  double utility_local = 0.0;
  double utility_edge = 0.0;
  double potential = 0.0;  // after the move
};

struct Stage1Result {
  OffloadProfile profile;
  Allocation allocation;
  std::size_t sweeps = 0;
  std::size_t moves = 0;
  bool converged = false;
  std::vector<GameTraceEntry> trace;
};

// Better-response dynamics from the all-local profile. UDs are visited in
// index order; a UD switches only on a strict improvement, and switching to
// the edge is allowed only if every offloader still meets its deadline.
// Stops after a sweep without moves or after `sweep_cap` sweeps.
Stage1Result solve_stage1(const OffloadingGame& game, std::size_t sweep_cap,
                          bool record_trace = false);

}  // namespace uavmec

#endif  // UAVMEC_GAME_HPP_
