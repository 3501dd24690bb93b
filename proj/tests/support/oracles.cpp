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

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace uavmec::testing {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double simplex_objective(const std::vector<double>& c, const std::vector<double>& x) {
  double v = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) v += c[i] / x[i];
  return v;
}

// `coarse` scans the grid, `fine` refines; both map a point to a value.
template <typename Coarse, typename Fine>
GridOptimum grid_minimize(const Coarse& coarse, const Fine& fine, Vec2 center,
                          double radius, double pitch) {
  const auto& f = fine;
  struct Cand {
    double value;
    Vec2 p;
  };
  std::vector<Cand> best;
  const auto keep = [&](Vec2 p, double v) {
    if (!std::isfinite(v)) return;
    if (best.size() < 8) {
      best.push_back({v, p});
    } else {
      auto worst = std::max_element(best.begin(), best.end(),
                                    [](const Cand& a, const Cand& b) { return a.value < b.value; });
      if (v < worst->value) *worst = {v, p};
    }
  };
  const int n = static_cast<int>(std::ceil(radius / pitch));
  for (int i = -n; i <= n; ++i) {
    for (int j = -n; j <= n; ++j) {
      const Vec2 d{i * pitch, j * pitch};
      if (squared_norm(d) > radius * radius) continue;
      keep(center + d, coarse(center + d));
    }
  }
  keep(center, f(center));

  GridOptimum out{center, kInf};
  for (const Cand& c : best) {
    Vec2 p = c.p;
    double v = c.value;
    for (double step = pitch; step > 1e-7; step *= 0.5) {
      bool moved = true;
      for (int walk = 0; moved && walk < 64; ++walk) {
        moved = false;
        for (Vec2 dir : {Vec2{1, 0}, Vec2{-1, 0}, Vec2{0, 1}, Vec2{0, -1},
                         Vec2{0.7071067811865476, 0.7071067811865476},
                         Vec2{-0.7071067811865476, 0.7071067811865476},
                         Vec2{0.7071067811865476, -0.7071067811865476},
                         Vec2{-0.7071067811865476, -0.7071067811865476}}) {
          Vec2 q = p + dir * step;
          const Vec2 d = q - center;
          if (squared_norm(d) > radius * radius) q = center + d * (radius / norm(d));
          const double w = f(q);
          if (w < v) {
            v = w;
            p = q;
            moved = true;
          }
        }
      }
    }
    if (v < out.value) out = {p, v};
  }
  return out;
}

}  // namespace

double naive_propulsion_power(double v, const UavParams& p) {
  const double v2 = v * v;
  return p.c1 * (1.0 + 3.0 * v2 / (p.u_tip * p.u_tip)) +
         p.c2 * std::sqrt(std::sqrt(p.c3 + v2 * v2 / 4.0) - v2 / 2.0) +
         p.c4 * v2 * v;
}

std::vector<double> simplex_newton(const std::vector<double>& c) {
  const std::size_t n = c.size();
  if (n == 0) throw std::invalid_argument("simplex_newton: empty");
  std::vector<double> x(n, 1.0 / static_cast<double>(n));
  for (int it = 0; it < 200; ++it) {
    // KKT step: dx = -(g - nu) / h with sum(dx) = 0.
    std::vector<double> g(n), h(n);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      g[i] = -c[i] / (x[i] * x[i]);
      h[i] = 2.0 * c[i] / (x[i] * x[i] * x[i]);
      num += g[i] / h[i];
      den += 1.0 / h[i];
    }
    const double nu = num / den;
    std::vector<double> dx(n);
    double decrement = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      dx[i] = -(g[i] - nu) / h[i];
      decrement += dx[i] * dx[i] * h[i];
    }
    if (decrement < 1e-30) break;
    const double f0 = simplex_objective(c, x);
    double t = 1.0;
    std::vector<double> trial(n);
    for (int ls = 0; ls < 100; ++ls, t *= 0.5) {
      bool positive = true;
      for (std::size_t i = 0; i < n; ++i) {
        trial[i] = x[i] + t * dx[i];
        positive = positive && trial[i] > 0;
      }
      if (positive && simplex_objective(c, trial) <= f0 - 0.25 * t * decrement) break;
    }
    x = trial;
  }
  return x;
}

EdgeCoefficients edge_coefficients(const std::vector<OffloaderInput>& set,
                                   const ResourcePool& pool) {
  EdgeCoefficients out;
  for (const auto& o : set) {
    const double g = o.params.gamma;
    const double d = o.task.data_bits;
    out.compute.push_back(g * o.task.intensity * d / pool.f_max);
    out.bandwidth.push_back((g + (1.0 - g) * o.params.tx_power) * d /
                            (pool.bandwidth * o.spectral_efficiency));
  }
  return out;
}

ProfileEvaluation evaluate_profile(const GameContext& ctx,
                                   const OffloadProfile& profile) {
  const std::size_t n = ctx.uds.size();
  const ResourcePool pool{ctx.channel.bandwidth, ctx.uav.f_max};
  const double price = ctx.queues.q_compute / ctx.queues.v_param;

  std::vector<OffloaderInput> set;
  std::vector<std::size_t> index;
  for (std::size_t m = 0; m < n; ++m) {
    if (!profile[m]) continue;
    const UdState& ud = ctx.uds[m];
    set.push_back({m, ud.task, ud.params,
                   spectral_efficiency(ud, ctx.uav_position, ctx.channel, ctx.uav.height)});
    index.push_back(m);
  }
  std::vector<double> s, w;
  if (!set.empty()) {
    if (ctx.policy == AllocationPolicy::kOptimal) {
      const EdgeCoefficients k = edge_coefficients(set, pool);
      s = simplex_newton(k.compute);
      w = simplex_newton(k.bandwidth);
    } else {
      s.assign(set.size(), 1.0 / static_cast<double>(set.size()));
      w = s;
    }
  }

  ProfileEvaluation ev;
  ev.utility.assign(n, 0.0);
  for (std::size_t m = 0; m < n; ++m) {
    const UdState& ud = ctx.uds[m];
    const double g = ud.params.gamma;
    const double cycles = ud.task.intensity * ud.task.data_bits;
    if (!profile[m]) {
      const double t_loc = cycles / ud.params.f_local;
      const double e_loc = ud.params.kappa_eff * ud.params.f_local * ud.params.f_local * cycles;
      ev.utility[m] = g * t_loc + (1.0 - g) * e_loc;
    }
  }
  for (std::size_t k = 0; k < set.size(); ++k) {
    const std::size_t m = index[k];
    const UdState& ud = ctx.uds[m];
    const double g = ud.params.gamma;
    const double cycles = ud.task.intensity * ud.task.data_bits;
    const double rate = w[k] * pool.bandwidth * set[k].spectral_efficiency;
    const double t_ec = ud.task.data_bits / rate + cycles / (s[k] * pool.f_max);
    const double e_ec = ud.params.tx_power * ud.task.data_bits / rate;
    ev.utility[m] = price * ctx.uav.varpi * cycles + g * t_ec + (1.0 - g) * e_ec;
    if (t_ec > ud.task.deadline) ev.feasible = false;
  }
  return ev;
}

std::vector<OffloadProfile> brute_force_equilibria(const GameContext& ctx,
                                                   double rel_tol) {
  const std::size_t n = ctx.uds.size();
  if (n > 20) throw std::invalid_argument("brute_force_equilibria: too many UDs");
  const std::size_t total = std::size_t{1} << n;
  std::vector<ProfileEvaluation> evals(total);
  std::vector<OffloadProfile> profiles(total, OffloadProfile(n, 0));
  for (std::size_t mask = 0; mask < total; ++mask) {
    for (std::size_t m = 0; m < n; ++m) profiles[mask][m] = (mask >> m) & 1u;
    evals[mask] = evaluate_profile(ctx, profiles[mask]);
  }
  std::vector<OffloadProfile> out;
  for (std::size_t mask = 0; mask < total; ++mask) {
    if (!evals[mask].feasible) continue;
    bool stable = true;
    for (std::size_t m = 0; m < n && stable; ++m) {
      const std::size_t other = mask ^ (std::size_t{1} << m);
      const bool to_edge = !((mask >> m) & 1u);
      if (to_edge && !evals[other].feasible) continue;
      const double mine = evals[mask].utility[m];
      const double alt = evals[other].utility[m];
      if (alt < mine - rel_tol * std::max(1.0, std::abs(mine))) stable = false;
    }
    if (stable) out.push_back(profiles[mask]);
  }
  return out;
}

GridOptimum grid_minimize_p2(const TrajectoryProblem& prob, double pitch) {
  const double r = prob.radius();
  const double h2 = prob.uav.height * prob.uav.height;
  std::vector<double> weight;
  for (const auto& o : prob.offloaders) {
    weight.push_back(prob.v_param * o.cost_weight /
                     (o.bandwidth_share * prob.channel.bandwidth));
  }
  // Written out from the model definitions for the dense scan.
  const auto direct = [&](Vec2 p) {
    const double v = distance(p, prob.current_position) / prob.tau;
    double value = prob.q_propulsion * prob.tau * naive_propulsion_power(v, prob.uav);
    for (std::size_t m = 0; m < weight.size(); ++m) {
      const auto& o = prob.offloaders[m];
      double path = h2 + squared_norm(p - o.position);
      if (prob.channel.mu != 1.0) path = std::pow(path, prob.channel.mu);
      value += weight[m] / std::log2(1.0 + o.snr_scale / path);
    }
    return value;
  };
  return grid_minimize(
      direct,
      [&](Vec2 p) {
        if (distance(p, prob.current_position) > r) return kInf;
        return p2_objective(p, prob);
      },
      prob.current_position, r, pitch);
}

double surrogate_value(Vec2 candidate, const ScaIterate& iterate,
                       const TrajectoryProblem& prob) {
  const UavParams& u = prob.uav;
  const double tau = prob.tau;
  const double v = distance(candidate, prob.current_position) / tau;
  // C3 / y^2 - f_lower(y) is decreasing in y; bisect its root.
  const auto residual = [&](double y) {
    return u.c3 / (y * y) - f_lower(candidate, y, iterate, prob.current_position, tau);
  };
  double lo = 1e-9, hi = 1.0;
  while (residual(hi) > 0) hi *= 2.0;
  for (int i = 0; i < 80; ++i) {
    const double mid = 0.5 * (lo + hi);
    (residual(mid) > 0 ? lo : hi) = mid;
  }
  const double y = hi;
  double value = prob.q_propulsion * tau *
                 (u.c1 * (1.0 + 3.0 * v * v / (u.u_tip * u.u_tip)) + u.c2 * y +
                  u.c4 * v * v * v);
  for (std::size_t m = 0; m < prob.offloaders.size(); ++m) {
    const double z = g_lower(candidate, m, iterate, prob);
    if (!(z > 0)) return kInf;
    const auto& o = prob.offloaders[m];
    value += prob.v_param * o.cost_weight / (o.bandwidth_share * prob.channel.bandwidth * z);
  }
  return value;
}

GridOptimum grid_minimize_surrogate(const ScaIterate& iterate,
                                    const TrajectoryProblem& prob, double pitch) {
  const double r = prob.radius();
  const auto f = [&](Vec2 p) {
    if (distance(p, prob.current_position) > r) return kInf;
    return surrogate_value(p, iterate, prob);
  };
  return grid_minimize(f, f, prob.current_position, r, pitch);
}

}  // namespace uavmec::testing
