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

#include "uavmec/game.hpp"

#include <stdexcept>

namespace uavmec {

OffloadingGame::OffloadingGame(GameContext ctx)
    : ctx_(std::move(ctx)),
      pool_{ctx_.channel.bandwidth, ctx_.uav.f_max},
      price_(ctx_.queues.q_compute / ctx_.queues.v_param) {
  const std::size_t n = ctx_.uds.size();
  inputs_.reserve(n);
  weights_.reserve(n);
  local_utility_.reserve(n);
  for (std::size_t m = 0; m < n; ++m) {
    const UdState& ud = ctx_.uds[m];
    if (ud.id != m) throw std::invalid_argument("GameContext: UD ids must be 0..M-1");
    inputs_.push_back(make_offloader(ud, ctx_.uav_position, ctx_.channel,
                                     ctx_.uav.height));
    weights_.push_back(compute_weights(inputs_.back(), pool_));
    local_utility_.push_back(ud_cost(false, ud.task, ud.params, 0.0, 0.0));
  }
}

std::vector<OffloaderInput> OffloadingGame::offloaders_of(
    const OffloadProfile& profile) const {
  std::vector<OffloaderInput> out;
  for (std::size_t j = 0; j < profile.size(); ++j) {
    if (profile[j]) out.push_back(inputs_[j]);
  }
  return out;
}

Allocation OffloadingGame::allocation(const OffloadProfile& profile) const {
  const auto set = offloaders_of(profile);
  if (set.empty()) return {};
  return ctx_.policy == AllocationPolicy::kOptimal ? optimal_allocation(set, pool_)
                                                   : era_allocation(set);
}

EdgeOption OffloadingGame::edge_option(std::size_t m,
                                       const OffloadProfile& profile) const {
  OffloadProfile with_m = profile;
  with_m[m] = 1;
  const Allocation alloc = allocation(with_m);
  const double s = alloc.compute_share(m);
  const double w = alloc.bandwidth_share(m);
  EdgeOption opt;
  if (!(s > 0) || !(w > 0)) return opt;
  const OffloaderInput& o = inputs_[m];
  const double rate = w * pool_.bandwidth * o.spectral_efficiency;
  opt.delay = edge_delay(o.task, rate, s * pool_.f_max);
  opt.cost = ud_cost(true, o.task, o.params, rate, s * pool_.f_max);
  opt.utility = price_ * uav_compute_energy(o.task, ctx_.uav.varpi) + opt.cost;
  return opt;
}

double OffloadingGame::utility(std::size_t m, const OffloadProfile& profile) const {
  return profile[m] ? utility_edge(m, profile) : utility_local(m);
}

bool OffloadingGame::feasible(const OffloadProfile& profile) const {
  const Allocation alloc = allocation(profile);
  for (std::size_t j = 0; j < profile.size(); ++j) {
    if (!profile[j]) continue;
    const double s = alloc.compute_share(j);
    const double w = alloc.bandwidth_share(j);
    if (!(s > 0) || !(w > 0)) return false;
    const OffloaderInput& o = inputs_[j];
    const double delay =
        edge_delay(o.task, w * pool_.bandwidth * o.spectral_efficiency,
                   s * pool_.f_max);
    if (delay > o.task.deadline) return false;
  }
  return true;
}

double OffloadingGame::potential(const OffloadProfile& profile) const {
  double value = 0.0;
  double beta_prefix = 0.0;
  double comm_prefix = 0.0;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (profile[i]) {
      beta_prefix += weights_[i].beta;
      comm_prefix += weights_[i].comm;
      value += price_ * uav_compute_energy(inputs_[i].task, ctx_.uav.varpi) +
               weights_[i].beta * beta_prefix + weights_[i].comm * comm_prefix;
    } else {
      value += local_utility_[i];
    }
  }
  return value;
}

Stage1Result solve_stage1(const OffloadingGame& game, std::size_t sweep_cap,
                          bool record_trace) {
  const std::size_t n = game.size();
  Stage1Result result;
  result.profile.assign(n, 0);
  OffloadProfile& a = result.profile;

  while (result.sweeps < sweep_cap) {
    ++result.sweeps;
    bool changed = false;
    for (std::size_t m = 0; m < n; ++m) {
      const double u_loc = game.utility_local(m);
      const EdgeOption edge = game.edge_option(m, a);
      int next = a[m];
      if (a[m] == 0) {
        OffloadProfile candidate = a;
        candidate[m] = 1;
        if (edge.utility < u_loc && game.feasible(candidate)) next = 1;
      } else if (u_loc < edge.utility) {
        next = 0;
      }
      if (next != a[m]) {
        a[m] = static_cast<std::uint8_t>(next);
        changed = true;
        ++result.moves;
        if (record_trace) {
          result.trace.push_back({result.sweeps, m, next, u_loc, edge.utility,
                                  game.potential(a)});
        }
      }
    }
    if (!changed) {
      result.converged = true;
      break;
    }
  }
  result.allocation = game.allocation(a);
  return result;
}

}  // namespace uavmec
