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

#include "uavmec/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <system_error>

namespace uavmec {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_list(std::string_view s) {
  std::vector<std::string_view> out;
  if (trim(s).empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = s.find(',', start);
    out.push_back(trim(s.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

template <typename T>
T parse_number(std::string_view text) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw std::invalid_argument("expected a number, got '" + std::string(text) +
                                "'");
  }
  return value;
}

bool parse_bool(std::string_view text) {
  if (text == "true" || text == "1") return true;
  if (text == "false" || text == "0") return false;
  throw std::invalid_argument("expected true/false, got '" + std::string(text) +
                              "'");
}

template <typename T>
std::string join(const std::vector<T>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    if constexpr (std::is_same_v<T, double>) {
      out += format_double(values[i]);
    } else if constexpr (std::is_same_v<T, SchemeKind>) {
      out += scheme_name(values[i]);
    } else {
      out += std::to_string(values[i]);
    }
  }
  return out;
}

struct KeyDef {
  std::string name;
  std::string provenance;  // "reference" (reference setup) or "assumed"
  bool numeric_scalar;
  std::function<std::string(const ScenarioConfig&)> get;
  std::function<void(ScenarioConfig&, std::string_view)> set;
};

KeyDef real(std::string name, std::string prov,
            std::function<double&(ScenarioConfig&)> ref) {
  return {std::move(name), std::move(prov), true,
          [ref](const ScenarioConfig& c) {
            return format_double(ref(const_cast<ScenarioConfig&>(c)));
          },
          [ref](ScenarioConfig& c, std::string_view v) {
            ref(c) = parse_number<double>(v);
          }};
}

KeyDef count(std::string name, std::string prov,
             std::function<std::size_t&(ScenarioConfig&)> ref) {
  return {std::move(name), std::move(prov), true,
          [ref](const ScenarioConfig& c) {
            return std::to_string(ref(const_cast<ScenarioConfig&>(c)));
          },
          [ref](ScenarioConfig& c, std::string_view v) {
            ref(c) = parse_number<std::size_t>(v);
          }};
}

KeyDef flag(std::string name, std::string prov,
            std::function<bool&(ScenarioConfig&)> ref) {
  return {std::move(name), std::move(prov), false,
          [ref](const ScenarioConfig& c) {
            return std::string(ref(const_cast<ScenarioConfig&>(c)) ? "true"
                                                                   : "false");
          },
          [ref](ScenarioConfig& c, std::string_view v) { ref(c) = parse_bool(v); }};
}

const std::vector<KeyDef>& registry() {
  static const std::vector<KeyDef> defs = [] {
    std::vector<KeyDef> d;
    d.push_back(count("sim.M", "reference", [](auto& c) -> auto& { return c.num_uds; }));
    d.push_back(count("sim.T", "reference", [](auto& c) -> auto& { return c.num_slots; }));
    d.push_back(real("sim.tau", "reference", [](auto& c) -> auto& { return c.tau; }));
    d.push_back({"sim.seeds", "assumed", false,
                 [](const ScenarioConfig& c) { return join(c.seeds); },
                 [](ScenarioConfig& c, std::string_view v) {
                   c.seeds.clear();
                   for (auto item : split_list(v)) {
                     c.seeds.push_back(parse_number<std::uint64_t>(item));
                   }
                 }});
    d.push_back({"sim.schemes", "reference", false,
                 [](const ScenarioConfig& c) { return join(c.schemes); },
                 [](ScenarioConfig& c, std::string_view v) {
                   c.schemes.clear();
                   for (auto item : split_list(v)) {
                     auto s = parse_scheme(item);
                     if (!s) {
                       throw std::invalid_argument("unknown scheme '" +
                                                   std::string(item) + "'");
                     }
                     c.schemes.push_back(*s);
                   }
                 }});
    d.push_back(count("sim.workers", "assumed", [](auto& c) -> auto& { return c.workers; }));
    d.push_back(real("area.width", "reference", [](auto& c) -> auto& { return c.area.width; }));
    d.push_back(real("area.height", "reference", [](auto& c) -> auto& { return c.area.height; }));
    d.push_back(real("channel.xi1", "assumed", [](auto& c) -> auto& { return c.channel.xi1; }));
    d.push_back(real("channel.xi2", "assumed", [](auto& c) -> auto& { return c.channel.xi2; }));
    d.push_back(real("channel.kappa", "assumed", [](auto& c) -> auto& { return c.channel.kappa; }));
    d.push_back(real("channel.beta0", "assumed", [](auto& c) -> auto& { return c.channel.beta0; }));
    d.push_back(real("channel.mu", "assumed", [](auto& c) -> auto& { return c.channel.mu; }));
    d.push_back(real("channel.noise_power", "assumed", [](auto& c) -> auto& { return c.channel.noise_power; }));
    d.push_back(real("channel.bandwidth", "reference", [](auto& c) -> auto& { return c.channel.bandwidth; }));
    d.push_back(real("uav.height", "reference", [](auto& c) -> auto& { return c.uav.height; }));
    d.push_back(real("uav.v_max", "reference", [](auto& c) -> auto& { return c.uav.v_max; }));
    d.push_back(real("uav.f_max", "reference", [](auto& c) -> auto& { return c.uav.f_max; }));
    d.push_back(real("uav.initial_x", "reference", [](auto& c) -> auto& { return c.uav.initial_position.x; }));
    d.push_back(real("uav.initial_y", "reference", [](auto& c) -> auto& { return c.uav.initial_position.y; }));
    d.push_back(real("uav.c1", "assumed", [](auto& c) -> auto& { return c.uav.c1; }));
    d.push_back(real("uav.c2", "assumed", [](auto& c) -> auto& { return c.uav.c2; }));
    d.push_back(real("uav.c3", "assumed", [](auto& c) -> auto& { return c.uav.c3; }));
    d.push_back(real("uav.c4", "assumed", [](auto& c) -> auto& { return c.uav.c4; }));
    d.push_back(real("uav.u_tip", "assumed", [](auto& c) -> auto& { return c.uav.u_tip; }));
    d.push_back(real("uav.varpi", "assumed", [](auto& c) -> auto& { return c.uav.varpi; }));
    d.push_back(real("ud.tx_power", "reference", [](auto& c) -> auto& { return c.tx_power; }));
    d.push_back(real("ud.kappa_eff", "assumed", [](auto& c) -> auto& { return c.kappa_eff; }));
    d.push_back(real("ud.gamma_min", "assumed", [](auto& c) -> auto& { return c.gamma_min; }));
    d.push_back(real("ud.gamma_max", "assumed", [](auto& c) -> auto& { return c.gamma_max; }));
    d.push_back({"ud.f_local_choices", "reference", false,
                 [](const ScenarioConfig& c) { return join(c.f_local_choices); },
                 [](ScenarioConfig& c, std::string_view v) {
                   c.f_local_choices.clear();
                   for (auto item : split_list(v)) {
                     c.f_local_choices.push_back(parse_number<double>(item));
                   }
                 }});
    d.push_back(real("task.data_size_min", "reference", [](auto& c) -> auto& { return c.data_size_min; }));
    d.push_back(real("task.data_size_max", "reference", [](auto& c) -> auto& { return c.data_size_max; }));
    d.push_back(real("task.intensity_min", "reference", [](auto& c) -> auto& { return c.intensity_min; }));
    d.push_back(real("task.intensity_max", "reference", [](auto& c) -> auto& { return c.intensity_max; }));
    d.push_back(real("task.deadline", "reference", [](auto& c) -> auto& { return c.deadline; }));
    d.push_back(real("mobility.alpha", "assumed", [](auto& c) -> auto& { return c.mobility_alpha; }));
    d.push_back(real("mobility.mean_speed_max", "assumed", [](auto& c) -> auto& { return c.mean_speed_max; }));
    d.push_back(real("mobility.sigma", "assumed", [](auto& c) -> auto& { return c.mobility_sigma; }));
    d.push_back(real("energy.budget", "assumed", [](auto& c) -> auto& { return c.energy_budget; }));
    d.push_back(real("energy.compute_fraction", "assumed", [](auto& c) -> auto& { return c.compute_budget_fraction; }));
    d.push_back(real("lyapunov.V", "assumed", [](auto& c) -> auto& { return c.v_param; }));
    d.push_back(count("game.sweep_cap_factor", "assumed", [](auto& c) -> auto& { return c.game_sweep_factor; }));
    d.push_back(real("sca.epsilon", "reference", [](auto& c) -> auto& { return c.sca_epsilon; }));
    d.push_back(count("sca.max_iterations", "assumed", [](auto& c) -> auto& { return c.sca_max_iterations; }));
    d.push_back(flag("scheme.era_moves", "assumed", [](auto& c) -> auto& { return c.era_moves; }));
    d.push_back({"scheme.flp_allocation", "assumed", false,
                 [](const ScenarioConfig& c) {
                   return std::string(c.flp_allocation == AllocationPolicy::kOptimal
                                          ? "optimal"
                                          : "equal");
                 },
                 [](ScenarioConfig& c, std::string_view v) {
                   if (v == "optimal") {
                     c.flp_allocation = AllocationPolicy::kOptimal;
                   } else if (v == "equal") {
                     c.flp_allocation = AllocationPolicy::kEqual;
                   } else {
                     throw std::invalid_argument("expected optimal|equal, got '" +
                                                 std::string(v) + "'");
                   }
                 }});
    d.push_back(flag("scheme.elc_hover_energy", "assumed", [](auto& c) -> auto& { return c.elc_hover_energy; }));
    d.push_back({"sweep.key", "assumed", false,
                 [](const ScenarioConfig& c) { return c.sweep_key; },
                 [](ScenarioConfig& c, std::string_view v) { c.sweep_key = v; }});
    d.push_back({"sweep.values", "assumed", false,
                 [](const ScenarioConfig& c) { return join(c.sweep_values); },
                 [](ScenarioConfig& c, std::string_view v) {
                   c.sweep_values.clear();
                   for (auto item : split_list(v)) {
                     c.sweep_values.push_back(parse_number<double>(item));
                   }
                 }});
    d.push_back({"output.dir", "assumed", false,
                 [](const ScenarioConfig& c) { return c.output_dir.string(); },
                 [](ScenarioConfig& c, std::string_view v) { c.output_dir = v; }});
    d.push_back(flag("output.game_trace", "assumed", [](auto& c) -> auto& { return c.game_trace; }));
    d.push_back(flag("output.sca_trace", "assumed", [](auto& c) -> auto& { return c.sca_trace; }));
    return d;
  }();
  return defs;
}

const KeyDef* find_key(std::string_view key) {
  for (const auto& def : registry()) {
    if (def.name == key) return &def;
  }
  return nullptr;
}

void check(bool ok, const char* key, const std::string& what) {
  if (!ok) throw ConfigError(key, "", what);
}

}  // namespace

std::string_view scheme_name(SchemeKind s) {
  switch (s) {
    case SchemeKind::kOjoa: return "OJOA";
    case SchemeKind::kElc: return "ELC";
    case SchemeKind::kEra: return "ERA";
    case SchemeKind::kFlp: return "FLP";
    case SchemeKind::kOcq: return "OCQ";
  }
  return "?";
}

std::optional<SchemeKind> parse_scheme(std::string_view name) {
  for (auto s : kAllSchemes) {
    if (scheme_name(s) == name) return s;
  }
  return std::nullopt;
}

ConfigError::ConfigError(std::string key, std::string where,
                         const std::string& what)
    : std::runtime_error((where.empty() ? "" : where + ": ") + key + ": " + what),
      key_(std::move(key)),
      where_(std::move(where)) {}

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) throw std::runtime_error("format_double failed");
  return std::string(buf, ptr);
}

void ScenarioConfig::validate() const {
  check(num_uds >= 1, "sim.M", "must be >= 1");
  check(num_slots >= 1, "sim.T", "must be >= 1");
  check(tau > 0, "sim.tau", "must be > 0");
  check(!seeds.empty(), "sim.seeds", "must list at least one seed");
  check(!schemes.empty(), "sim.schemes", "must list at least one scheme");
  check(area.width > 0, "area.width", "must be > 0");
  check(area.height > 0, "area.height", "must be > 0");
  try {
    channel.validate();
    uav.validate();
  } catch (const std::invalid_argument& e) {
    const std::string msg = e.what();
    const auto colon = msg.find(':');
    throw ConfigError(msg.substr(0, colon), "", msg.substr(colon + 2));
  }
  check(area.contains(uav.initial_position), "uav.initial_x",
        "initial position must lie inside the area");
  check(tx_power > 0, "ud.tx_power", "must be > 0");
  check(kappa_eff > 0, "ud.kappa_eff", "must be > 0");
  check(gamma_min >= 0.05 && gamma_min <= 0.95, "ud.gamma_min",
        "must be in [0.05, 0.95]");
  check(gamma_max >= gamma_min && gamma_max <= 0.95, "ud.gamma_max",
        "must be in [ud.gamma_min, 0.95]");
  check(!f_local_choices.empty(), "ud.f_local_choices", "must not be empty");
  for (double f : f_local_choices) {
    check(f > 0, "ud.f_local_choices", "entries must be > 0");
  }
  check(data_size_min > 0, "task.data_size_min", "must be > 0");
  check(data_size_max >= data_size_min, "task.data_size_max",
        "must be >= task.data_size_min");
  check(intensity_min > 0, "task.intensity_min", "must be > 0");
  check(intensity_max >= intensity_min, "task.intensity_max",
        "must be >= task.intensity_min");
  check(deadline > 0, "task.deadline", "must be > 0");
  check(mobility_alpha >= 0 && mobility_alpha <= 1, "mobility.alpha",
        "must be in [0, 1]");
  check(mean_speed_max >= 0, "mobility.mean_speed_max", "must be >= 0");
  check(mobility_sigma >= 0, "mobility.sigma", "must be >= 0");
  check(energy_budget > 0, "energy.budget", "must be > 0");
  check(compute_budget_fraction >= 0 && compute_budget_fraction <= 1,
        "energy.compute_fraction", "must be in [0, 1]");
  check(v_param > 0, "lyapunov.V", "must be > 0");
  check(game_sweep_factor >= 1, "game.sweep_cap_factor", "must be >= 1");
  check(sca_epsilon > 0, "sca.epsilon", "must be > 0");
  check(sca_max_iterations >= 1, "sca.max_iterations", "must be >= 1");
  if (!sweep_key.empty()) {
    const KeyDef* def = find_key(sweep_key);
    check(def != nullptr && def->numeric_scalar, "sweep.key",
          "'" + sweep_key + "' is not a numeric configuration key");
    check(!sweep_values.empty(), "sweep.values", "must not be empty");
    for (double v : sweep_values) {
      ScenarioConfig probe = *this;
      probe.sweep_key.clear();
      probe.sweep_values.clear();
      def->set(probe, format_double(v));
      probe.validate();
    }
  } else {
    check(sweep_values.empty(), "sweep.values", "given without sweep.key");
  }
}

void set_config_value(ScenarioConfig& cfg, std::string_view key,
                      std::string_view value, std::string_view where) {
  const KeyDef* def = find_key(key);
  if (def == nullptr) {
    throw ConfigError(std::string(key), std::string(where), "unknown key");
  }
  try {
    def->set(cfg, trim(value));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string(key), std::string(where),
                      std::string("type mismatch: ") + e.what());
  }
}

namespace {

// A single-line source (a command-line override) is located by `source`
// alone, without a line suffix.
ScenarioConfig parse_into(std::string_view text, std::string_view source,
                          ScenarioConfig cfg,
                          std::map<std::string, std::string>& origin,
                          bool single_line = false) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto nl = text.find('\n', start);
    std::string_view line = text.substr(start, nl - start);
    ++line_no;
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const std::string where =
        single_line ? std::string(source)
                    : std::string(source) + ":" + std::to_string(line_no);
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(std::string(line), where, "expected 'key = value'");
    }
    const std::string key(trim(line.substr(0, eq)));
    set_config_value(cfg, key, line.substr(eq + 1), where);
    origin[key] = where;
  }
  return cfg;
}

}  // namespace

ScenarioConfig parse_config(std::string_view text, std::string_view source,
                            ScenarioConfig base) {
  std::map<std::string, std::string> origin;
  return parse_into(text, source, std::move(base), origin);
}

ScenarioConfig load_config(const std::filesystem::path& path,
                           const std::vector<std::string>& overrides) {
  std::map<std::string, std::string> origin;
  ScenarioConfig cfg;
  if (!path.empty()) {
    std::ifstream in(path);
    if (!in) {
      throw ConfigError("config", path.string(), "cannot open file");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    cfg = parse_into(buf.str(), path.string(), std::move(cfg), origin);
  }
  for (std::size_t i = 0; i < overrides.size(); ++i) {
    cfg = parse_into(overrides[i], "override:" + std::to_string(i + 1),
                     std::move(cfg), origin, /*single_line=*/true);
  }
  try {
    cfg.validate();
  } catch (const ConfigError& e) {
    if (!e.where().empty()) throw;
    auto it = origin.find(e.key());
    const std::string where = it == origin.end() ? "defaults" : it->second;
    const std::string msg = e.what();
    throw ConfigError(e.key(), where, msg.substr(e.key().size() + 2));
  }
  return cfg;
}

std::string config_echo(const ScenarioConfig& cfg) {
  const ScenarioConfig defaults;
  std::string out = "# effective configuration\n";
  for (const auto& def : registry()) {
    const std::string value = def.get(cfg);
    const bool overridden = value != def.get(defaults);
    out += def.name + " = " + value + "  # " +
           (overridden ? std::string("set") : def.provenance) + "\n";
  }
  return out;
}

std::vector<std::string> config_keys() {
  std::vector<std::string> keys;
  for (const auto& def : registry()) keys.push_back(def.name);
  return keys;
}

}  // namespace uavmec
