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

#include "uavmec/sim.hpp"

#include <algorithm>
#include <exception>

namespace uavmec {
namespace {

struct SchemeRules {
  bool offloading = true;
  AllocationPolicy policy = AllocationPolicy::kOptimal;
  bool moves = true;
  bool queue_weights = true;
};

SchemeRules rules_for(SchemeKind scheme, const ScenarioConfig& cfg) {
  SchemeRules r;
  switch (scheme) {
    case SchemeKind::kOjoa:
      break;
    case SchemeKind::kElc:
      r.offloading = false;
      r.moves = false;
      break;
    case SchemeKind::kEra:
      r.policy = AllocationPolicy::kEqual;
      r.moves = cfg.era_moves;
      break;
    case SchemeKind::kFlp:
      r.policy = cfg.flp_allocation;
      r.moves = false;
      break;
    case SchemeKind::kOcq:
      r.queue_weights = false;
      break;
  }
  return r;
}

}  // namespace

Vec2 initial_uav_position(SchemeKind scheme, const ScenarioConfig& cfg) {
  return scheme == SchemeKind::kFlp ? cfg.area.center() : cfg.uav.initial_position;
}

SlotOutcome run_slot(SchemeKind scheme, const ScenarioConfig& cfg,
                     const std::vector<UdState>& uds, const WorldState& world) {
  return run_slot(scheme, cfg, uds, world, drift_bound_constant(cfg));
}

SlotOutcome run_slot(SchemeKind scheme, const ScenarioConfig& cfg,
                     const std::vector<UdState>& uds, const WorldState& world,
                     double drift_constant) {
  const SchemeRules rules = rules_for(scheme, cfg);
  const std::size_t n = uds.size();
  const Vec2 here = world.uav_position;

  EnergyQueues weights = world.queues;
  if (!rules.queue_weights) {
    weights.q_compute = 0.0;
    weights.q_propulsion = 0.0;
  }

  SlotOutcome out;
  SlotRecord& rec = out.record;
  rec.t = world.t;
  rec.uav_position = here;
  rec.ud_costs.assign(n, 0.0);
  rec.profile.assign(n, 0);

  Vec2 next = here;
  if (!rules.offloading) {
    for (std::size_t m = 0; m < n; ++m) {
      rec.ud_costs[m] = ud_cost(false, uds[m].task, uds[m].params, 0.0, 0.0);
    }
  } else {
    GameContext ctx{uds, here, weights, cfg.channel, cfg.uav, rules.policy};
    const OffloadingGame game(std::move(ctx));
    const Stage1Result s1 =
        solve_stage1(game, cfg.game_sweep_factor * std::max<std::size_t>(n, 1),
                     cfg.game_trace);
    rec.profile = s1.profile;
    rec.game_sweeps = s1.sweeps;
    rec.game_converged = s1.converged;
    if (cfg.game_trace) out.diagnostics.game_trace = s1.trace;

    TrajectoryProblem plan;
    plan.current_position = here;
    plan.q_propulsion = weights.q_propulsion;
    plan.v_param = weights.v_param;
    plan.uav = cfg.uav;
    plan.channel = cfg.channel;
    plan.tau = cfg.tau;
    for (std::size_t m = 0; m < n; ++m) {
      const UdState& ud = uds[m];
      if (!rec.profile[m]) {
        rec.ud_costs[m] = game.utility_local(m);
        continue;
      }
      const EdgeOption edge = game.edge_option(m, rec.profile);
      rec.ud_costs[m] = edge.cost;
      rec.e_compute += uav_compute_energy(ud.task, cfg.uav.varpi);
      rec.workload += ud.task.cycles();
      ++rec.offload_count;

      TrajectoryOffloader o;
      o.position = ud.position;
      o.cost_weight = ud.params.gamma * ud.task.data_bits +
                      (1.0 - ud.params.gamma) * ud.params.tx_power * ud.task.data_bits;
      o.bandwidth_share = s1.allocation.bandwidth_share(m);
      o.snr_scale = snr_scale(ud, here, cfg.channel, cfg.uav.height);
      plan.offloaders.push_back(o);
    }

    if (rules.moves && !plan.offloaders.empty()) {
      Stage2Options opts;
      opts.epsilon = cfg.sca_epsilon;
      opts.max_iterations = cfg.sca_max_iterations;
      const Stage2Result s2 = solve_stage2(plan, opts);
      next = s2.position;
      rec.sca_iterations = s2.iterations;
      rec.sca_converged = s2.converged;
      if (cfg.sca_trace) out.diagnostics.sca_trace = s2.trace;
    }
  }

  for (double c : rec.ud_costs) rec.system_cost += c;
  if (scheme == SchemeKind::kElc && !cfg.elc_hover_energy) {
    rec.e_propulsion = 0.0;
  } else {
    const double speed = std::min(distance(here, next) / cfg.tau, cfg.uav.v_max);
    rec.e_propulsion = propulsion_power(speed, cfg.uav) * cfg.tau;
  }
  rec.next_position = next;

  const EnergyQueues after = update_queues(world.queues, rec.e_compute, rec.e_propulsion);
  rec.q_compute = after.q_compute;
  rec.q_propulsion = after.q_propulsion;
  rec.drift_plus_penalty = lyapunov_value(after) - lyapunov_value(world.queues) +
                           world.queues.v_param * rec.system_cost;
  rec.drift_bound = drift_bound_rhs(world.queues, drift_constant,
                                    rec.e_compute, rec.e_propulsion, rec.system_cost);

  out.next.t = world.t + 1;
  out.next.uav_position = next;
  out.next.queues = after;
  return out;
}

double series_mean(const std::vector<double>& series) {
  if (series.empty()) return 0.0;
  double sum = 0.0;
  for (double v : series) sum += v;
  return sum / static_cast<double>(series.size());
}

Metrics compute_metrics(const std::vector<SlotRecord>& records) {
  Metrics m;
  std::vector<double> offloads;
  for (const SlotRecord& r : records) {
    m.ud_cost_series.push_back(r.system_cost);
    m.uav_energy_series.push_back(r.e_total());
    m.workload_series.push_back(r.workload);
    offloads.push_back(static_cast<double>(r.offload_count));
  }
  m.time_average_ud_cost = series_mean(m.ud_cost_series);
  m.time_average_uav_energy = series_mean(m.uav_energy_series);
  m.time_average_workload = series_mean(m.workload_series);
  m.time_average_offload_count = series_mean(offloads);
  if (!records.empty()) {
    m.final_q_compute = records.back().q_compute;
    m.final_q_propulsion = records.back().q_propulsion;
  }
  return m;
}

Episode run_episode(SchemeKind scheme, const ScenarioConfig& cfg,
                    std::uint64_t seed) {
  return run_episode(scheme, cfg, generate_scenario(cfg, seed), seed);
}

Episode run_episode(SchemeKind scheme, const ScenarioConfig& cfg,
                    const Scenario& scenario, std::uint64_t seed) {
  Episode ep;
  ep.scheme = scheme;
  ep.seed = seed;
  WorldState world;
  world.uav_position = initial_uav_position(scheme, cfg);
  world.queues = EnergyQueues::from_config(cfg);
  const bool keep_diag = cfg.game_trace || cfg.sca_trace;
  try {
    const double w = drift_bound_constant(cfg);
    for (std::size_t t = 0; t < cfg.num_slots; ++t) {
      SlotOutcome out = run_slot(scheme, cfg, scenario.uds_at(t), world, w);
      ep.records.push_back(std::move(out.record));
      if (keep_diag) ep.diagnostics.push_back(std::move(out.diagnostics));
      world = out.next;
    }
  } catch (const std::exception& e) {
    ep.error = "slot " + std::to_string(world.t) + ": " + e.what();
  }
  ep.metrics = compute_metrics(ep.records);
  return ep;
}

}  // namespace uavmec
