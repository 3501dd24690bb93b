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

#include "uavmec/model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace uavmec {
namespace {

void require(bool ok, const char* field, const char* what) {
  if (!ok) {
    throw std::invalid_argument(std::string(field) + ": " + what);
  }
}

}  // namespace

void ChannelParams::validate() const {
  require(xi1 > 0, "channel.xi1", "must be > 0");
  require(xi2 > 0, "channel.xi2", "must be > 0");
  require(kappa > 0 && kappa <= 1, "channel.kappa", "must be in (0, 1]");
  require(beta0 > 0, "channel.beta0", "must be > 0");
  require(mu > 0, "channel.mu", "must be > 0");
  require(noise_power > 0, "channel.noise_power", "must be > 0");
  require(bandwidth > 0, "channel.bandwidth", "must be > 0");
}

void UavParams::validate() const {
  require(height > 0, "uav.height", "must be > 0");
  require(v_max > 0, "uav.v_max", "must be > 0");
  require(f_max > 0, "uav.f_max", "must be > 0");
  require(c1 > 0, "uav.c1", "must be > 0");
  require(c2 > 0, "uav.c2", "must be > 0");
  require(c3 > 0, "uav.c3", "must be > 0");
  require(c4 > 0, "uav.c4", "must be > 0");
  require(u_tip > 0, "uav.u_tip", "must be > 0");
  require(varpi > 0, "uav.varpi", "must be > 0");
}

void UdParams::validate() const {
  require(f_local > 0, "ud.f_local", "must be > 0");
  require(tx_power > 0, "ud.tx_power", "must be > 0");
  require(gamma >= 0 && gamma <= 1, "ud.gamma", "must be in [0, 1]");
  require(kappa_eff > 0, "ud.kappa_eff", "must be > 0");
}

void Task::validate() const {
  require(data_bits > 0, "task.data_bits", "must be > 0");
  require(intensity > 0, "task.intensity", "must be > 0");
  require(deadline > 0, "task.deadline", "must be > 0");
}

double elevation_angle_deg(Vec2 ud_pos, Vec2 uav_pos, double height) {
  const double d = std::sqrt(squared_norm(uav_pos - ud_pos) + height * height);
  return 180.0 / std::numbers::pi * std::asin(height / d);
}

double los_probability(Vec2 ud_pos, Vec2 uav_pos, const ChannelParams& ch,
                       double height) {
  const double theta = elevation_angle_deg(ud_pos, uav_pos, height);
  return 1.0 / (1.0 + ch.xi1 * std::exp(-ch.xi2 * (theta - ch.xi1)));
}

double effective_los_factor(double p_los, double kappa) {
  return p_los + (1.0 - p_los) * kappa;
}

double snr_scale(const UdState& ud, Vec2 uav_pos, const ChannelParams& ch,
                 double height) {
  const double p_los = los_probability(ud.position, uav_pos, ch, height);
  return ud.params.tx_power * ch.beta0 * effective_los_factor(p_los, ch.kappa) /
         ch.noise_power;
}

double spectral_efficiency_from_scale(double scale, double horizontal_sq,
                                      double height, double mu) {
  const double path = std::pow(horizontal_sq + height * height, mu);
  return std::log2(1.0 + scale / path);
}

double spectral_efficiency(const UdState& ud, Vec2 uav_pos,
                           const ChannelParams& ch, double height) {
  return spectral_efficiency_from_scale(snr_scale(ud, uav_pos, ch, height),
                                        squared_norm(uav_pos - ud.position),
                                        height, ch.mu);
}

double uplink_rate(double w, const UdState& ud, Vec2 uav_pos,
                   const ChannelParams& ch, double height) {
  if (w < 0 || w > 1) throw std::invalid_argument("bandwidth fraction outside [0, 1]");
  if (w == 0) return 0.0;
  return w * ch.bandwidth * spectral_efficiency(ud, uav_pos, ch, height);
}

double local_delay(const Task& task, const UdParams& ud) {
  return task.cycles() / ud.f_local;
}

double local_energy(const Task& task, const UdParams& ud) {
  return ud.kappa_eff * ud.f_local * ud.f_local * ud.f_local *
         local_delay(task, ud);
}

double edge_delay(const Task& task, double rate, double f_alloc) {
  if (!(rate > 0)) throw std::invalid_argument("edge_delay: rate must be > 0");
  if (!(f_alloc > 0)) {
    throw std::invalid_argument("edge_delay: allocated compute must be > 0");
  }
  return task.data_bits / rate + task.cycles() / f_alloc;
}

double transmit_energy(const Task& task, double tx_power, double rate) {
  if (!(rate > 0)) throw std::invalid_argument("transmit_energy: rate must be > 0");
  return tx_power * task.data_bits / rate;
}

double uav_compute_energy(const Task& task, double varpi) {
  return varpi * task.cycles();
}

double induced_radicand(double speed, double c3) {
  const double v2 = speed * speed;
  return c3 / (std::sqrt(c3 + 0.25 * v2 * v2) + 0.5 * v2);
}

double propulsion_power(double speed, const UavParams& p) {
  if (speed < 0 || speed > p.v_max * (1.0 + 1e-9)) {
    throw std::invalid_argument("propulsion_power: speed outside [0, v_max]");
  }
  const double v2 = speed * speed;
  const double blade = p.c1 * (1.0 + 3.0 * v2 / (p.u_tip * p.u_tip));
  const double induced = p.c2 * std::sqrt(induced_radicand(speed, p.c3));
  const double parasite = p.c4 * v2 * speed;
  return blade + induced + parasite;
}

double ud_cost(bool offload, const Task& task, const UdParams& ud, double rate,
               double f_alloc) {
  if (!offload) {
    return ud.gamma * local_delay(task, ud) +
           (1.0 - ud.gamma) * local_energy(task, ud);
  }
  return ud.gamma * edge_delay(task, rate, f_alloc) +
         (1.0 - ud.gamma) * transmit_energy(task, ud.tx_power, rate);
}

UavSlotEnergy uav_slot_energy(const OffloadVector& offload,
                              std::span<const Task> tasks, double varpi,
                              double speed, double tau, const UavParams& p) {
  if (offload.size() != tasks.size()) {
    throw std::invalid_argument("uav_slot_energy: offload/task size mismatch");
  }
  UavSlotEnergy e;
  for (std::size_t m = 0; m < tasks.size(); ++m) {
    if (offload[m]) e.compute += uav_compute_energy(tasks[m], varpi);
  }
  e.propulsion = propulsion_power(speed, p) * tau;
  return e;
}

}  // namespace uavmec
