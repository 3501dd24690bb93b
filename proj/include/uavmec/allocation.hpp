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

#ifndef UAVMEC_ALLOCATION_HPP_
#define UAVMEC_ALLOCATION_HPP_

// Splitting the UAV's CPU and bandwidth among the UDs that offload.

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "uavmec/model.hpp"

namespace uavmec {

// What the allocator needs to know about one offloading UD. The spectral
// efficiency is taken at the UAV position the decision is made for.
struct OffloaderInput {
  std::size_t id = 0;
  Task task;
  UdParams params;
  double spectral_efficiency = 0.0;  // bits/s/Hz
};

OffloaderInput make_offloader(const UdState& ud, Vec2 uav_pos,
                              const ChannelParams& ch, double height);

struct ResourcePool {
  double bandwidth = 0.0;  // Hz
  double f_max = 0.0;      // cycles/s
};

// Square-root weights of the closed-form split:
//   beta = sqrt(gamma * eta * D / F_max)
//   comm = sqrt((gamma * D + (1 - gamma) * P * D) / (B * r))
struct OffloadWeights {
  double beta = 0.0;
  double comm = 0.0;
};

OffloadWeights compute_weights(const OffloaderInput& o, const ResourcePool& pool);
OffloadWeights compute_weights(const UdState& ud, Vec2 uav_pos,
                               const ChannelParams& ch, const UavParams& p);

struct Allocation {
  std::map<std::size_t, double> compute_fraction;    // s_m
  std::map<std::size_t, double> bandwidth_fraction;  // w_m

  double compute_share(std::size_t id) const;
  double bandwidth_share(std::size_t id) const;
  bool empty() const { return compute_fraction.empty(); }
};

// s_m = beta_m / sum(beta), w_m = comm_m / sum(comm). Throws
// std::invalid_argument for an empty offloader set. A zero weight sum gives
// every offloader a zero fraction.
Allocation optimal_allocation(std::span<const OffloaderInput> offloaders,
                              const ResourcePool& pool);

// Equal split 1 / |offloaders| of both resources.
Allocation era_allocation(std::span<const OffloaderInput> offloaders);

// gamma * T_ec + (1 - gamma) * E_ec of one offloader under shares (s, w).
// Throws std::invalid_argument when either share is not positive.
double edge_cost(const OffloaderInput& o, double compute_share,
                 double bandwidth_share, const ResourcePool& pool);

// Sum of edge_cost over the offloaders.
double p11_objective(std::span<const OffloaderInput> offloaders,
                     const Allocation& alloc, const ResourcePool& pool);

}  // namespace uavmec

#endif  // UAVMEC_ALLOCATION_HPP_
