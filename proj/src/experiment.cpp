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

#include "uavmec/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace uavmec {
namespace {

using nlohmann::json;

struct Job {
  std::size_t sweep_index = 0;
  std::optional<double> sweep_value;
  SchemeKind scheme = SchemeKind::kOjoa;
  std::uint64_t seed = 0;
};

std::string sweep_text(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::string prefix(const JobResult& j) {
  return std::string(scheme_name(j.episode.scheme)) + "," +
         std::to_string(j.episode.seed) + "," + sweep_text(j.sweep_value);
}

void write_traces(const ScenarioConfig& cfg, const std::vector<JobResult>& jobs,
                  const std::filesystem::path& dir) {
  if (cfg.game_trace) {
    std::ostringstream out;
    out << "scheme,seed,sweep_value,t,sweep,mover,decision,utility_local,"
           "utility_edge,potential\n";
    for (const JobResult& j : jobs) {
      for (std::size_t t = 0; t < j.episode.diagnostics.size(); ++t) {
        for (const GameTraceEntry& e : j.episode.diagnostics[t].game_trace) {
          out << prefix(j) << ',' << t << ',' << e.sweep << ',' << e.mover << ','
              << e.decision << ',' << format_double(e.utility_local) << ','
              << format_double(e.utility_edge) << ','
              << format_double(e.potential) << '\n';
        }
      }
    }
    write_file(dir / "game_trace.csv", out.str());
  }
  if (cfg.sca_trace) {
    std::ostringstream out;
    out << "scheme,seed,sweep_value,t,iteration,surrogate,exact,x,y\n";
    for (const JobResult& j : jobs) {
      for (std::size_t t = 0; t < j.episode.diagnostics.size(); ++t) {
        for (const ScaTraceEntry& e : j.episode.diagnostics[t].sca_trace) {
          out << prefix(j) << ',' << t << ',' << e.iteration << ','
              << format_double(e.surrogate_objective) << ','
              << format_double(e.exact_objective) << ','
              << format_double(e.position.x) << ','
              << format_double(e.position.y) << '\n';
        }
      }
    }
    write_file(dir / "sca_trace.csv", out.str());
  }
}

}  // namespace

ScenarioConfig config_for_point(const ScenarioConfig& cfg,
                                std::optional<double> sweep_value) {
  if (!sweep_value) return cfg;
  ScenarioConfig point = cfg;
  set_config_value(point, cfg.sweep_key, format_double(*sweep_value), "sweep");
  point.validate();
  return point;
}

std::vector<JobResult> run_jobs(const ScenarioConfig& cfg) {
  std::vector<std::optional<double>> points;
  if (cfg.sweep_key.empty()) {
    points.push_back(std::nullopt);
  } else {
    for (double v : cfg.sweep_values) points.push_back(v);
  }
  std::vector<ScenarioConfig> point_cfgs;
  for (const auto& p : points) point_cfgs.push_back(config_for_point(cfg, p));

  std::vector<Job> jobs;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (SchemeKind s : cfg.schemes) {
      for (std::uint64_t seed : cfg.seeds) jobs.push_back({i, points[i], s, seed});
    }
  }

  std::vector<JobResult> results(jobs.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t k = next++; k < jobs.size(); k = next++) {
      const Job& job = jobs[k];
      results[k].sweep_index = job.sweep_index;
      results[k].sweep_value = job.sweep_value;
      results[k].episode = run_episode(job.scheme, point_cfgs[job.sweep_index], job.seed);
    }
  };
  std::size_t workers = cfg.workers;
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, std::max<std::size_t>(jobs.size(), 1));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return results;
}

std::filesystem::path resolve_output_dir(const ScenarioConfig& cfg) {
  if (const char* env = std::getenv(kOutputDirEnv); env != nullptr && *env != '\0') {
    return env;
  }
  return cfg.output_dir;
}

void write_slots_csv(const std::vector<JobResult>& jobs, std::ostream& out) {
  out << "scheme,seed,sweep_value,t,C_s,E_c,E_p,workload,Q_c,Q_p,"
         "offload_count,uav_x,uav_y\n";
  for (const JobResult& j : jobs) {
    const std::string head = prefix(j);
    for (const SlotRecord& r : j.episode.records) {
      out << head << ',' << r.t << ',' << format_double(r.system_cost) << ','
          << format_double(r.e_compute) << ',' << format_double(r.e_propulsion)
          << ',' << format_double(r.workload) << ','
          << format_double(r.q_compute) << ',' << format_double(r.q_propulsion)
          << ',' << r.offload_count << ',' << format_double(r.uav_position.x)
          << ',' << format_double(r.uav_position.y) << '\n';
    }
  }
}

std::string metrics_json(const ScenarioConfig& cfg,
                         const std::vector<JobResult>& jobs) {
  json doc;
  doc["sweep_key"] = cfg.sweep_key;
  json& eps = doc["episodes"] = json::array();
  for (const JobResult& j : jobs) {
    const Episode& e = j.episode;
    json item;
    item["scheme"] = std::string(scheme_name(e.scheme));
    item["seed"] = e.seed;
    item["sweep_value"] = j.sweep_value ? json(*j.sweep_value) : json(nullptr);
    item["slots"] = e.records.size();
    item["status"] = e.error.empty() ? "ok" : "error";
    if (!e.error.empty()) item["reason"] = e.error;
    item["time_average_ud_cost"] = e.metrics.time_average_ud_cost;
    item["time_average_uav_energy"] = e.metrics.time_average_uav_energy;
    item["time_average_workload"] = e.metrics.time_average_workload;
    item["time_average_offload_count"] = e.metrics.time_average_offload_count;
    item["final_q_compute"] = e.metrics.final_q_compute;
    item["final_q_propulsion"] = e.metrics.final_q_propulsion;
    eps.push_back(std::move(item));
  }
  return doc.dump(2) + "\n";
}

int run_experiment(const ScenarioConfig& cfg) {
  const std::filesystem::path dir = resolve_output_dir(cfg);
  std::filesystem::create_directories(dir);
  write_file(dir / "config_echo.txt", config_echo(cfg));

  const std::vector<JobResult> jobs = run_jobs(cfg);

  std::ostringstream csv;
  write_slots_csv(jobs, csv);
  write_file(dir / "slots.csv", csv.str());
  write_file(dir / "metrics.json", metrics_json(cfg, jobs));
  write_traces(cfg, jobs, dir);

  for (const JobResult& j : jobs) {
    if (!j.episode.error.empty()) return 1;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Summaries.

bool Summary::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const OrderingCheck& c) {
    return !c.evaluated || c.passed;
  });
}

void mean_and_std(const std::vector<double>& values, double& mean, double& std) {
  mean = 0.0;
  std = 0.0;
  if (values.empty()) return;
  for (double v : values) mean += v;
  mean /= static_cast<double>(values.size());
  if (values.size() < 2) return;
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  std = std::sqrt(ss / static_cast<double>(values.size() - 1));
}

namespace {

struct Samples {
  std::vector<double> cost, energy, workload;
};

using PointKey = std::optional<double>;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

void check_ordering(Summary& s, PointKey point,
                    const std::map<std::string, SummaryRow>& by_scheme) {
  const auto has = [&](const char* name) { return by_scheme.count(name) > 0; };
  const auto missing = [&](std::initializer_list<const char*> names) {
    std::string out;
    for (const char* n : names) {
      if (!has(n)) out += (out.empty() ? "" : ",") + std::string(n);
    }
    return out;
  };

  {
    OrderingCheck c{"cost OJOA < FLP < OCQ < ERA < ELC", point, false, false, ""};
    const std::initializer_list<const char*> order = {"OJOA", "FLP", "OCQ", "ERA", "ELC"};
    const std::string gap = missing(order);
    if (gap.empty()) {
      c.evaluated = true;
      c.passed = true;
      const char* prev = nullptr;
      for (const char* n : order) {
        if (prev != nullptr) {
          const double a = by_scheme.at(prev).cost_mean;
          const double b = by_scheme.at(n).cost_mean;
          if (!(a < b)) {
            c.passed = false;
            c.detail += std::string(prev) + "=" + fmt(a) + " !< " + n + "=" + fmt(b) + "; ";
          }
        }
        prev = n;
      }
    } else {
      c.detail = "missing " + gap;
    }
    s.checks.push_back(c);
  }
  {
    OrderingCheck c{"ERA lowest workload among offloading schemes", point, false, false, ""};
    const std::string gap = missing({"OJOA", "FLP", "OCQ", "ERA"});
    if (gap.empty()) {
      c.evaluated = true;
      c.passed = true;
      const double era = by_scheme.at("ERA").workload_mean;
      for (const char* n : {"OJOA", "FLP", "OCQ"}) {
        const double other = by_scheme.at(n).workload_mean;
        if (!(era < other)) {
          c.passed = false;
          c.detail += std::string("ERA=") + fmt(era) + " !< " + n + "=" + fmt(other) + "; ";
        }
      }
    } else {
      c.detail = "missing " + gap;
    }
    s.checks.push_back(c);
  }
}

}  // namespace

Summary summarize_json_text(const std::vector<std::string>& documents) {
  // point -> scheme -> samples; std::map keeps nullopt first, then ascending.
  std::map<PointKey, std::map<std::string, Samples>> data;
  for (const std::string& text : documents) {
    const json doc = json::parse(text);
    for (const json& e : doc.at("episodes")) {
      if (e.value("status", "ok") != "ok") continue;
      PointKey point;
      if (!e.at("sweep_value").is_null()) point = e.at("sweep_value").get<double>();
      Samples& smp = data[point][e.at("scheme").get<std::string>()];
      smp.cost.push_back(e.at("time_average_ud_cost").get<double>());
      smp.energy.push_back(e.at("time_average_uav_energy").get<double>());
      smp.workload.push_back(e.at("time_average_workload").get<double>());
    }
  }

  Summary s;
  std::ostringstream table;
  table << "sweep_value  scheme  seeds  ud_cost(mean+-std)  uav_energy(mean+-std)  "
           "workload(mean+-std)\n";
  for (const auto& [point, schemes] : data) {
    std::map<std::string, SummaryRow> by_scheme;
    for (SchemeKind kind : kAllSchemes) {
      const std::string name(scheme_name(kind));
      const std::string pt = point ? format_double(*point) : "-";
      const auto it = schemes.find(name);
      if (it == schemes.end()) {
        table << pt << "  " << name << "  0  [no data]\n";
        continue;
      }
      SummaryRow row;
      row.scheme = name;
      row.sweep_value = point;
      row.seeds = it->second.cost.size();
      mean_and_std(it->second.cost, row.cost_mean, row.cost_std);
      mean_and_std(it->second.energy, row.energy_mean, row.energy_std);
      mean_and_std(it->second.workload, row.workload_mean, row.workload_std);
      table << pt << "  " << name << "  " << row.seeds << "  " << fmt(row.cost_mean)
            << " +- " << fmt(row.cost_std) << "  " << fmt(row.energy_mean) << " +- "
            << fmt(row.energy_std) << "  " << fmt(row.workload_mean) << " +- "
            << fmt(row.workload_std) << "\n";
      by_scheme[name] = row;
      s.rows.push_back(row);
    }
    check_ordering(s, point, by_scheme);
  }
  table << "\n";
  for (const OrderingCheck& c : s.checks) {
    table << (c.evaluated ? (c.passed ? "PASS" : "FAIL") : "SKIP") << "  "
          << c.name;
    if (c.sweep_value) table << " @ " << format_double(*c.sweep_value);
    if (!c.detail.empty()) table << "  (" << c.detail << ")";
    table << "\n";
  }
  s.table = table.str();
  return s;
}

Summary summarize(const std::vector<std::filesystem::path>& metrics_files) {
  std::vector<std::string> docs;
  for (const auto& path : metrics_files) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    docs.push_back(buf.str());
  }
  try {
    return summarize_json_text(docs);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed metrics file: ") + e.what());
  }
}

}  // namespace uavmec
