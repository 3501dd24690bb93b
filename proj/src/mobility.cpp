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

#include "uavmec/mobility.hpp"

#include <cmath>
#include <stdexcept>

namespace uavmec {
namespace {

// Folds a coordinate back into [0, extent]. Returns true when an odd number
// of reflections happened, i.e. the velocity component flips sign.
bool reflect(double& coord, double extent) {
  bool flipped = false;
  while (coord < 0 || coord > extent) {
    if (coord < 0) {
      coord = -coord;
    } else {
      coord = 2.0 * extent - coord;
    }
    flipped = !flipped;
  }
  return flipped;
}

}  // namespace

void MobilityParams::validate() const {
  if (alpha < 0 || alpha > 1) {
    throw std::invalid_argument("mobility.alpha: must be in [0, 1]");
  }
  if (sigma < 0) throw std::invalid_argument("mobility.sigma: must be >= 0");
  if (!(area.width > 0) || !(area.height > 0)) {
    throw std::invalid_argument("area: width and height must be > 0");
  }
}

Vec2 step_velocity(Vec2 v, const MobilityParams& p, Vec2 noise) {
  const double gain = std::sqrt(1.0 - p.alpha * p.alpha);
  return p.alpha * v + (1.0 - p.alpha) * p.mean_velocity + gain * noise;
}

MobilityStep step_position(Vec2 pos, Vec2 v, double tau, const Area& area) {
  MobilityStep out{pos + v * tau, v};
  if (reflect(out.position.x, area.width)) out.velocity.x = -out.velocity.x;
  if (reflect(out.position.y, area.height)) out.velocity.y = -out.velocity.y;
  return out;
}

}  // namespace uavmec
