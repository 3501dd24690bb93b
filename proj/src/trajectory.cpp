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

#include "uavmec/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <boost/math/tools/minima.hpp>

namespace uavmec {
namespace {

constexpr double kDiskTolerance = 1e-9;
constexpr std::size_t kMaxNewtonSteps = 4000;

// Symmetric 2x2 matrix.
struct Sym2 {
  double xx = 0.0, xy = 0.0, yy = 0.0;

  Sym2& operator+=(const Sym2& o) {
    xx += o.xx;
    xy += o.xy;
    yy += o.yy;
    return *this;
  }
};

Sym2 outer(Vec2 a, double scale) {
  return {scale * a.x * a.x, scale * a.x * a.y, scale * a.y * a.y};
}

Sym2 identity(double scale) { return {scale, 0.0, scale}; }

struct Eval {
  double value = 0.0;
  Vec2 grad;
  Sym2 hess;
};

// Positive root of 2 a y^3 + c y^2 - C3 = 0 (a > 0). The cubic is increasing
// and convex to the right of its positive root, so Newton from an upper
// bracket converges monotonically.
double slack_root(double a, double c, double c3) {
  const auto p = [&](double y) { return (2.0 * a * y + c) * y * y - c3; };
  double y = std::max({1e-6, std::cbrt(c3 / a), -c / a});
  while (p(y) <= 0) y *= 2.0;
  for (int it = 0; it < 200; ++it) {
    const double dp = 6.0 * a * y * y + 2.0 * c * y;
    const double next = y - p(y) / dp;
    if (!(next < y)) break;
    y = next;
    if (p(y) <= 0) break;
  }
  return y;
}

// The convex surrogate, as a function of the displacement d = P' - P_u with
// the slacks substituted at their tight values.
class Surrogate {
 public:
  Surrogate(const ScaIterate& iterate, const TrajectoryProblem& prob)
      : prob_(prob), y_l_(iterate.y_local) {
    const double tau = prob.tau;
    d_l_ = iterate.local_point - prob.current_position;
    const double inv_tau2 = 1.0 / (tau * tau);
    grad_s_ = d_l_ * (2.0 * inv_tau2);
    s_offset_ = -squared_norm(d_l_) * inv_tau2;
    k_blade_ = prob.q_propulsion * tau * prob.uav.c1 * 3.0 /
               (prob.uav.u_tip * prob.uav.u_tip) * inv_tau2;
    k_induced_ = prob.q_propulsion * tau * prob.uav.c2;
    k_parasite_ = prob.q_propulsion * tau * prob.uav.c4 * inv_tau2 / tau;
    k_const_ = prob.q_propulsion * tau * prob.uav.c1;

    const double h2 = prob.uav.height * prob.uav.height;
    const double mu = prob.channel.mu;
    for (const auto& o : prob.offloaders) {
      Term t;
      t.ud = o.position;
      const double dist_sq = squared_norm(iterate.local_point - o.position);
      const double path = h2 + dist_sq;
      t.g_local = g_value(iterate.local_point, o, prob.uav.height, mu);
      t.slope = mu * o.snr_scale * std::numbers::log2e /
                ((o.snr_scale + std::pow(path, mu)) * path);
      t.dist_sq_local = dist_sq;
      t.weight = prob.v_param * o.cost_weight /
                 (o.bandwidth_share * prob.channel.bandwidth);
      terms_.push_back(t);
    }
  }

  double y_of(Vec2 d) const {
    const double s = dot(grad_s_, d) + s_offset_;
    return slack_root(y_l_, s - y_l_ * y_l_, prob_.uav.c3);
  }

  double g_low(std::size_t m, Vec2 d) const {
    const Term& t = terms_[m];
    const Vec2 p = prob_.current_position + d;
    return t.g_local - t.slope * (squared_norm(p - t.ud) - t.dist_sq_local);
  }

  bool in_domain(Vec2 d) const {
    if (squared_norm(d) >= prob_.radius() * prob_.radius()) return false;
    for (std::size_t m = 0; m < terms_.size(); ++m) {
      if (!(g_low(m, d) > 0)) return false;
    }
    return true;
  }

  // Surrogate value only (no derivatives).
  double value(Vec2 d) const {
    const double r2 = squared_norm(d);
    const double r = std::sqrt(r2);
    double v = k_const_ + k_blade_ * r2 + k_parasite_ * r2 * r;
    if (k_induced_ > 0) v += k_induced_ * y_of(d);
    for (std::size_t m = 0; m < terms_.size(); ++m) {
      v += terms_[m].weight / g_low(m, d);
    }
    return v;
  }

  Eval evaluate(Vec2 d) const {
    Eval e;
    const double r2 = squared_norm(d);
    const double r = std::sqrt(r2);
    e.value = k_const_ + k_blade_ * r2 + k_parasite_ * r2 * r;
    e.grad = d * (2.0 * k_blade_ + 3.0 * k_parasite_ * r);
    e.hess = identity(2.0 * k_blade_ + 3.0 * k_parasite_ * r);
    if (r > 0) e.hess += outer(d, 3.0 * k_parasite_ / r);

    if (k_induced_ > 0) {
      const double y = y_of(d);
      const double c3 = prob_.uav.c3;
      const double den = 2.0 * y_l_ * y * y * y + 2.0 * c3;
      const double dy = -y * y * y / den;
      const double d2y = 6.0 * c3 * std::pow(y, 5) / (den * den * den);
      e.value += k_induced_ * y;
      e.grad += grad_s_ * (k_induced_ * dy);
      e.hess += outer(grad_s_, k_induced_ * d2y);
    }

    const Vec2 p = prob_.current_position + d;
    for (std::size_t m = 0; m < terms_.size(); ++m) {
      const Term& t = terms_[m];
      const double g = g_low(m, d);
      const Vec2 dg = (p - t.ud) * (-2.0 * t.slope);
      e.value += t.weight / g;
      e.grad += dg * (-t.weight / (g * g));
      e.hess += outer(dg, 2.0 * t.weight / (g * g * g));
      e.hess += identity(2.0 * t.slope * t.weight / (g * g));
    }
    return e;
  }

  std::size_t size() const { return terms_.size(); }

 private:
  struct Term {
    Vec2 ud;
    double g_local = 0.0;
    double slope = 0.0;
    double dist_sq_local = 0.0;
    double weight = 0.0;
  };

  const TrajectoryProblem& prob_;
  double y_l_;
  Vec2 d_l_;
  Vec2 grad_s_;
  double s_offset_ = 0.0;
  double k_const_ = 0.0;
  double k_blade_ = 0.0;
  double k_induced_ = 0.0;
  double k_parasite_ = 0.0;
  std::vector<Term> terms_;
};

// log(R^2 - |d|^2) barrier pieces.
Eval disk_barrier(Vec2 d, double radius) {
  const double slack = radius * radius - squared_norm(d);
  Eval e;
  e.value = -std::log(slack);
  e.grad = d * (2.0 / slack);
  e.hess = identity(2.0 / slack);
  e.hess += outer(d, 4.0 / (slack * slack));
  return e;
}

}  // namespace

void TrajectoryProblem::validate() const {
  if (!(tau > 0)) throw std::invalid_argument("trajectory: tau must be > 0");
  if (q_propulsion < 0) {
    throw std::invalid_argument("trajectory: negative propulsion backlog");
  }
  if (!(v_param > 0)) throw std::invalid_argument("trajectory: V must be > 0");
  for (const auto& o : offloaders) {
    if (!(o.bandwidth_share > 0) || !(o.cost_weight > 0) || !(o.snr_scale > 0)) {
      throw std::invalid_argument("trajectory: offloader with non-positive data");
    }
  }
}

double p2_objective(Vec2 candidate, const TrajectoryProblem& prob) {
  const double dist = distance(candidate, prob.current_position);
  if (dist > prob.radius() + kDiskTolerance) {
    throw std::invalid_argument("p2_objective: candidate outside the speed disk");
  }
  const double speed = std::min(dist / prob.tau, prob.uav.v_max);
  double value = prob.q_propulsion * propulsion_power(speed, prob.uav) * prob.tau;
  for (const auto& o : prob.offloaders) {
    value += prob.v_param * o.cost_weight /
             (o.bandwidth_share * prob.channel.bandwidth *
              g_value(candidate, o, prob.uav.height, prob.channel.mu));
  }
  return value;
}

double y_anchor(Vec2 local_point, Vec2 current_position, double tau, double c3) {
  return std::sqrt(induced_radicand(distance(local_point, current_position) / tau, c3));
}

double f_lower(Vec2 candidate, double y, const ScaIterate& iterate,
               Vec2 current_position, double tau) {
  const double y_l = iterate.y_local;
  const Vec2 d_l = iterate.local_point - current_position;
  const Vec2 d = candidate - current_position;
  return y_l * y_l + 2.0 * y_l * (y - y_l) +
         (squared_norm(d_l) + 2.0 * dot(d_l, d - d_l)) / (tau * tau);
}

double g_value(Vec2 candidate, const TrajectoryOffloader& o, double height,
               double mu) {
  return spectral_efficiency_from_scale(
      o.snr_scale, squared_norm(candidate - o.position), height, mu);
}

double g_lower(Vec2 candidate, std::size_t m, const ScaIterate& iterate,
               const TrajectoryProblem& prob) {
  const TrajectoryOffloader& o = prob.offloaders.at(m);
  const double h2 = prob.uav.height * prob.uav.height;
  const double dist_sq_local = squared_norm(iterate.local_point - o.position);
  const double path = h2 + dist_sq_local;
  const double mu = prob.channel.mu;
  const double slope = mu * o.snr_scale * std::numbers::log2e /
                       ((o.snr_scale + std::pow(path, mu)) * path);
  return g_value(iterate.local_point, o, prob.uav.height, mu) -
         slope * (squared_norm(candidate - o.position) - dist_sq_local);
}

SubproblemSolution solve_subproblem(const ScaIterate& iterate,
                                    const TrajectoryProblem& prob) {
  if (prob.offloaders.empty()) {
    throw std::invalid_argument("solve_subproblem: empty offloader set");
  }
  const Surrogate surrogate(iterate, prob);
  const double radius = prob.radius();
  const Vec2 d_local = iterate.local_point - prob.current_position;

  SubproblemSolution sol;
  const auto finish = [&](Vec2 d) {
    sol.position = prob.current_position + d;
    sol.y = surrogate.y_of(d);
    sol.z.resize(surrogate.size());
    for (std::size_t m = 0; m < surrogate.size(); ++m) {
      sol.z[m] = surrogate.g_low(m, d);
    }
    sol.objective = surrogate.value(d);
  };

  // Strictly feasible start next to the local point.
  Vec2 d = d_local;
  const double local_norm = norm(d_local);
  if (local_norm >= radius * (1.0 - 1e-6)) d = d_local * (radius * (1.0 - 1e-6) / local_norm);
  if (!surrogate.in_domain(d)) {
    finish(d_local);
    return sol;
  }

  double t = 1.0 / std::max(std::abs(surrogate.value(d)), 1e-12);
  std::size_t steps = 0;
  bool failed = false;
  while (true) {
    // Centering: damped Newton on t * h(d) + barrier(d).
    for (int inner = 0; inner < 200; ++inner) {
      const Eval h = surrogate.evaluate(d);
      const Eval b = disk_barrier(d, radius);
      const Vec2 grad = h.grad * t + b.grad;
      Sym2 hess = b.hess;
      hess.xx += t * h.hess.xx;
      hess.xy += t * h.hess.xy;
      hess.yy += t * h.hess.yy;
      double det = hess.xx * hess.yy - hess.xy * hess.xy;
      if (!(det > 0) || !(hess.xx > 0)) {
        const double shift = 1e-12 * (std::abs(hess.xx) + std::abs(hess.yy) + 1.0);
        hess.xx += shift;
        hess.yy += shift;
        det = hess.xx * hess.yy - hess.xy * hess.xy;
      }
      const Vec2 step{-(hess.yy * grad.x - hess.xy * grad.y) / det,
                      -(-hess.xy * grad.x + hess.xx * grad.y) / det};
      const double decrement = -dot(grad, step);
      if (!(decrement >= 0) || !std::isfinite(decrement)) {
        failed = true;
        break;
      }
      if (decrement < 1e-18) break;
      const double phi0 = t * h.value + b.value;
      double alpha = 1.0;
      bool accepted = false;
      for (int ls = 0; ls < 60; ++ls, alpha *= 0.5) {
        const Vec2 trial = d + step * alpha;
        if (!surrogate.in_domain(trial)) continue;
        const double phi = t * surrogate.value(trial) -
                           std::log(radius * radius - squared_norm(trial));
        if (phi <= phi0 - 0.25 * alpha * decrement) {
          d = trial;
          accepted = true;
          break;
        }
      }
      if (++steps > kMaxNewtonSteps) {
        failed = true;
        break;
      }
      // No progress left at this precision.
      if (!accepted) break;
      if (decrement < 1e-14) break;
    }
    if (failed) break;
    const double gap = 1.0 / t;
    if (gap < 1e-13 * std::max(1.0, std::abs(surrogate.value(d)))) break;
    t *= 10.0;
  }

  sol.newton_steps = steps;
  if (failed) {
    finish(d_local);
    sol.converged = false;
    return sol;
  }
  finish(d);
  sol.converged = true;
  return sol;
}

double min_power_speed(const UavParams& p) {
  const auto power = [&p](double v) { return propulsion_power(v, p); };
  return boost::math::tools::brent_find_minima(power, 0.0, p.v_max, 40).first;
}

Vec2 endurance_start(const TrajectoryProblem& prob) {
  const double h2 = prob.uav.height * prob.uav.height;
  const double mu = prob.channel.mu;
  Vec2 descent;
  for (const auto& o : prob.offloaders) {
    const double path = h2 + squared_norm(prob.current_position - o.position);
    const double slope = mu * o.snr_scale * std::numbers::log2e /
                         ((o.snr_scale + std::pow(path, mu)) * path);
    const double g = g_value(prob.current_position, o, prob.uav.height, mu);
    const double weight = o.cost_weight / (o.bandwidth_share * g * g);
    descent += (o.position - prob.current_position) * (weight * slope);
  }
  const double len = norm(descent);
  const Vec2 dir = len > 0 ? descent * (1.0 / len) : Vec2{1.0, 0.0};
  const double r = std::min(min_power_speed(prob.uav) * prob.tau, prob.radius());
  return prob.current_position + dir * r;
}

Stage2Result run_sca(const TrajectoryProblem& prob, Vec2 start,
                     const Stage2Options& options) {
  Stage2Result result;
  result.position = start;
  ScaIterate iterate;
  iterate.local_point = start;
  iterate.objective_value = 0.0;
  Vec2 best = start;
  double best_exact = p2_objective(best, prob);

  for (std::size_t l = 1; l <= options.max_iterations; ++l) {
    iterate.iteration = l;
    iterate.y_local = y_anchor(iterate.local_point, prob.current_position,
                               prob.tau, prob.uav.c3);
    const SubproblemSolution sol = solve_subproblem(iterate, prob);
    result.iterations = l;
    if (!sol.converged) break;

    ScaTraceEntry entry;
    entry.iteration = l;
    entry.surrogate_objective = sol.objective;
    entry.position = sol.position;
    entry.exact_objective = p2_objective(sol.position, prob);
    entry.y = sol.y;
    entry.y_residual = std::abs(prob.uav.c3 / (sol.y * sol.y) -
                                f_lower(sol.position, sol.y, iterate,
                                        prob.current_position, prob.tau));
    for (std::size_t m = 0; m < sol.z.size(); ++m) {
      entry.z_residual = std::max(
          entry.z_residual, std::abs(sol.z[m] - g_lower(sol.position, m, iterate, prob)));
    }
    result.trace.push_back(entry);

    if (entry.exact_objective <= best_exact) {
      best_exact = entry.exact_objective;
      best = sol.position;
    }
    const double change = std::abs(sol.objective - iterate.objective_value);
    iterate.local_point = sol.position;
    iterate.objective_value = sol.objective;
    if (change < options.epsilon) {
      result.converged = true;
      break;
    }
  }
  result.position = result.converged ? iterate.local_point : best;
  return result;
}

Stage2Result solve_stage2(const TrajectoryProblem& prob,
                          const Stage2Options& options) {
  if (prob.offloaders.empty()) {
    Stage2Result held;
    held.position = prob.current_position;
    held.converged = true;
    return held;
  }
  prob.validate();
  Stage2Result result = run_sca(prob, prob.current_position, options);
  if (!options.endurance_start) return result;
  Stage2Result other = run_sca(prob, endurance_start(prob), options);
  if (p2_objective(other.position, prob) < p2_objective(result.position, prob)) {
    other.start = 1;
    return other;
  }
  return result;
}

}  // namespace uavmec
