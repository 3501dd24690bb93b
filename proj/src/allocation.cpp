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

#include "uavmec/allocation.hpp"

#include <cmath>
#include <stdexcept>

namespace uavmec {

OffloaderInput make_offloader(const UdState& ud, Vec2 uav_pos,
                              const ChannelParams& ch, double height) {
  return {ud.id, ud.task, ud.params, spectral_efficiency(ud, uav_pos, ch, height)};
}

OffloadWeights compute_weights(const OffloaderInput& o, const ResourcePool& pool) {
  const double gamma = o.params.gamma;
  const double d = o.task.data_bits;
  OffloadWeights w;
  w.beta = std::sqrt(gamma * o.task.cycles() / pool.f_max);
  w.comm = std::sqrt((gamma * d + (1.0 - gamma) * o.params.tx_power * d) /
                     (pool.bandwidth * o.spectral_efficiency));
  return w;
}

OffloadWeights compute_weights(const UdState& ud, Vec2 uav_pos,
                               const ChannelParams& ch, const UavParams& p) {
  return compute_weights(make_offloader(ud, uav_pos, ch, p.height),
                         ResourcePool{ch.bandwidth, p.f_max});
}

double Allocation::compute_share(std::size_t id) const {
  auto it = compute_fraction.find(id);
  return it == compute_fraction.end() ? 0.0 : it->second;
}

double Allocation::bandwidth_share(std::size_t id) const {
  auto it = bandwidth_fraction.find(id);
  return it == bandwidth_fraction.end() ? 0.0 : it->second;
}

Allocation optimal_allocation(std::span<const OffloaderInput> offloaders,
                              const ResourcePool& pool) {
  if (offloaders.empty()) {
    throw std::invalid_argument("optimal_allocation: empty offloader set");
  }
  std::vector<OffloadWeights> weights;
  weights.reserve(offloaders.size());
  double beta_sum = 0.0;
  double comm_sum = 0.0;
  for (const auto& o : offloaders) {
    weights.push_back(compute_weights(o, pool));
    beta_sum += weights.back().beta;
    comm_sum += weights.back().comm;
  }
  Allocation alloc;
  for (std::size_t i = 0; i < offloaders.size(); ++i) {
    const auto id = offloaders[i].id;
    alloc.compute_fraction[id] = beta_sum > 0 ? weights[i].beta / beta_sum : 0.0;
    alloc.bandwidth_fraction[id] = comm_sum > 0 ? weights[i].comm / comm_sum : 0.0;
  }
  return alloc;
}

Allocation era_allocation(std::span<const OffloaderInput> offloaders) {
  Allocation alloc;
  if (offloaders.empty()) return alloc;
  const double share = 1.0 / static_cast<double>(offloaders.size());
  for (const auto& o : offloaders) {
    alloc.compute_fraction[o.id] = share;
    alloc.bandwidth_fraction[o.id] = share;
  }
  return alloc;
}

double edge_cost(const OffloaderInput& o, double compute_share,
                 double bandwidth_share, const ResourcePool& pool) {
  if (!(compute_share > 0) || !(bandwidth_share > 0)) {
    throw std::invalid_argument("edge_cost: offloader with a zero share");
  }
  const double rate = bandwidth_share * pool.bandwidth * o.spectral_efficiency;
  const double f_alloc = compute_share * pool.f_max;
  return ud_cost(true, o.task, o.params, rate, f_alloc);
}

double p11_objective(std::span<const OffloaderInput> offloaders,
                     const Allocation& alloc, const ResourcePool& pool) {
  double total = 0.0;
  for (const auto& o : offloaders) {
    total += edge_cost(o, alloc.compute_share(o.id), alloc.bandwidth_share(o.id),
                       pool);
  }
  return total;
}

}  // namespace uavmec
