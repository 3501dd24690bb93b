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

#ifndef UAVMEC_MOBILITY_HPP_
#define UAVMEC_MOBILITY_HPP_

// Gauss-Markov UD mobility on a rectangular area with specular walls.
// Randomness is supplied by the caller so that every episode owns its
// generator.

#include "uavmec/geometry.hpp"

namespace uavmec {

struct Area {
  double width = 400.0;
  double height = 400.0;

  bool contains(Vec2 p) const {
    return p.x >= 0 && p.x <= width && p.y >= 0 && p.y <= height;
  }
  Vec2 center() const { return {0.5 * width, 0.5 * height}; }
};

struct MobilityParams {
  double alpha = 0.8;  // memory level in [0, 1]
  Vec2 mean_velocity;  // asymptotic mean, m/s
  double sigma = 0.5;  // asymptotic velocity std, m/s
  Area area;

  void validate() const;
};

// alpha * v + (1 - alpha) * mean + sqrt(1 - alpha^2) * noise, where noise is
// drawn by the caller from N(0, sigma^2) per component.
Vec2 step_velocity(Vec2 v, const MobilityParams& p, Vec2 noise);

struct MobilityStep {
  Vec2 position;
  Vec2 velocity;
};

// Advances pos by v * tau. Crossing a wall reflects the position about it and
// negates the matching velocity component.
MobilityStep step_position(Vec2 pos, Vec2 v, double tau, const Area& area);

}  // namespace uavmec

#endif  // UAVMEC_MOBILITY_HPP_
