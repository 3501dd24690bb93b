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

#ifndef UAVMEC_MODEL_HPP_
#define UAVMEC_MODEL_HPP_

// Physical model of the UAV-assisted edge system: air-to-ground channel,
// local and edge computation, UD cost and rotary-wing propulsion power.
// Everything here is a pure function of its arguments and uses SI base
// units (bits, cycles/s, W, J, m, s).

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "uavmec/geometry.hpp"

namespace uavmec {

// Probabilistic line-of-sight channel constants.
struct ChannelParams {
  double xi1 = 11.95;          // logistic LoS constant
  double xi2 = 0.14;           // logistic LoS constant
  double kappa = 0.2;          // extra NLoS attenuation, (0, 1]
  double beta0 = 1e-5;         // channel gain at 1 m (-50 dB)
  double mu = 1.0;             // half the path-loss exponent
  double noise_power = 1e-13;  // W (-100 dBm)
  double bandwidth = 4e6;      // Hz

  // Throws std::invalid_argument naming the offending field.
  void validate() const;
};

struct UavParams {
  double height = 100.0;              // m
  double v_max = 30.0;                // m/s
  double f_max = 20e9;                // cycles/s
  Vec2 initial_position{200.0, 200.0};
  // Rotary-wing propulsion constants: blade profile power (W), induced
  // power coefficient, squared hover induced velocity to the fourth (m^4/s^4)
  // and parasite coefficient.
  double c1 = 79.86;
  double c2 = 21.99;
  double c3 = 263.8;
  double c4 = 0.009243;
  double u_tip = 120.0;   // rotor tip speed, m/s
  double varpi = 1e-9;    // J per CPU cycle on the UAV

  void validate() const;
};

struct UdParams {
  double f_local = 1e9;      // cycles/s
  double tx_power = 0.1;     // W
  double gamma = 0.5;        // delay weight in [0, 1]
  double kappa_eff = 1e-27;  // effective switched capacitance

  void validate() const;
};

struct Task {
  double data_bits = 0.0;  // D
  double intensity = 0.0;  // cycles per bit
  double deadline = 0.0;   // s

  double cycles() const { return data_bits * intensity; }
  void validate() const;
};

struct UdState {
  std::size_t id = 0;
  Vec2 position;
  Vec2 velocity;
  UdParams params;
  Task task;
};

struct UavState {
  Vec2 position;
  UavParams params;
};

// Binary offloading decision per UD (1 = offload to the UAV).
using OffloadVector = std::vector<std::uint8_t>;

// Elevation angle in degrees between a UD and a UAV hovering at `height`.
double elevation_angle_deg(Vec2 ud_pos, Vec2 uav_pos, double height);

double los_probability(Vec2 ud_pos, Vec2 uav_pos, const ChannelParams& ch,
                       double height);

// P_los + (1 - P_los) * kappa.
double effective_los_factor(double p_los, double kappa);

// SNR numerator P_m * beta0 * effective_los / N0 at the given UAV position.
double snr_scale(const UdState& ud, Vec2 uav_pos, const ChannelParams& ch,
                 double height);

// log2(1 + scale / (horizontal_sq + height^2)^mu).
double spectral_efficiency_from_scale(double scale, double horizontal_sq,
                                      double height, double mu);

double spectral_efficiency(const UdState& ud, Vec2 uav_pos,
                           const ChannelParams& ch, double height);

// OFDMA uplink rate w * B * r in bits/s.
double uplink_rate(double w, const UdState& ud, Vec2 uav_pos,
                   const ChannelParams& ch, double height);

double local_delay(const Task& task, const UdParams& ud);
double local_energy(const Task& task, const UdParams& ud);

// Transmission plus execution delay. Throws std::invalid_argument when the
// rate or the allocated compute is not positive.
double edge_delay(const Task& task, double rate, double f_alloc);

double transmit_energy(const Task& task, double tx_power, double rate);
double uav_compute_energy(const Task& task, double varpi);

// sqrt(C3 + v^4/4) - v^2/2, evaluated without cancellation.
double induced_radicand(double speed, double c3);

// Blade profile + induced + parasite power at horizontal speed `speed`.
double propulsion_power(double speed, const UavParams& p);

// Weighted delay/energy cost of one UD. For offloaded tasks only the UD's
// transmit energy counts; the UAV's compute energy is billed to the UAV.
double ud_cost(bool offload, const Task& task, const UdParams& ud, double rate,
               double f_alloc);

struct UavSlotEnergy {
  double compute = 0.0;
  double propulsion = 0.0;
  double total() const { return compute + propulsion; }
};

UavSlotEnergy uav_slot_energy(const OffloadVector& offload,
                              std::span<const Task> tasks, double varpi,
                              double speed, double tau, const UavParams& p);

}  // namespace uavmec

#endif  // UAVMEC_MODEL_HPP_
