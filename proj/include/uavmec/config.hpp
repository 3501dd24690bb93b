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

#ifndef UAVMEC_CONFIG_HPP_
#define UAVMEC_CONFIG_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "uavmec/mobility.hpp"
#include "uavmec/model.hpp"

namespace uavmec {

enum class SchemeKind { kOjoa, kElc, kEra, kFlp, kOcq };

inline constexpr SchemeKind kAllSchemes[] = {SchemeKind::kOjoa, SchemeKind::kElc,
                                             SchemeKind::kEra, SchemeKind::kFlp,
                                             SchemeKind::kOcq};

std::string_view scheme_name(SchemeKind s);
std::optional<SchemeKind> parse_scheme(std::string_view name);

enum class AllocationPolicy { kOptimal, kEqual };

// Every tunable of a simulation run. Defaults reproduce the reference
// scenario: 20 UDs over a 400 m x 400 m area for 80 one-second slots.
struct ScenarioConfig {
  // sim.*
  std::size_t num_uds = 20;
  std::size_t num_slots = 80;
  double tau = 1.0;
  std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  std::vector<SchemeKind> schemes = {std::begin(kAllSchemes),
                                     std::end(kAllSchemes)};
  std::size_t workers = 0;  // 0 = hardware concurrency

  Area area;
  ChannelParams channel;
  UavParams uav;

  // ud.*: per-UD static attributes. gamma is drawn uniformly from
  // [gamma_min, gamma_max]; f_local uniformly from the choice list.
  double tx_power = 0.1;
  double kappa_eff = 1e-27;
  double gamma_min = 0.5;
  double gamma_max = 0.5;
  std::vector<double> f_local_choices = {1e9, 1.5e9, 2e9};

  // task.*
  double data_size_min = 0.1e6;
  double data_size_max = 1.0e6;
  double intensity_min = 500.0;
  double intensity_max = 1500.0;
  double deadline = 1.0;

  // mobility.*
  double mobility_alpha = 0.8;
  double mean_speed_max = 2.0;
  double mobility_sigma = 0.5;

  // energy.* and lyapunov.*
  double energy_budget = 220.0;
  double compute_budget_fraction = 0.15;
  double v_param = 50.0;

  // Solver controls.
  std::size_t game_sweep_factor = 10;
  double sca_epsilon = 0.01;
  std::size_t sca_max_iterations = 100;

  // Benchmark variants.
  bool era_moves = true;
  AllocationPolicy flp_allocation = AllocationPolicy::kOptimal;
  bool elc_hover_energy = true;

  // sweep.*: key of a numeric scalar and the values it takes.
  std::string sweep_key;
  std::vector<double> sweep_values;

  // output.*
  std::filesystem::path output_dir = "out";
  bool game_trace = false;
  bool sca_trace = false;

  double budget_compute() const { return compute_budget_fraction * energy_budget; }
  double budget_propulsion() const {
    return (1.0 - compute_budget_fraction) * energy_budget;
  }

  // Throws ConfigError naming the offending key.
  void validate() const;
};

// Raised for unknown keys, unparsable values and invariant violations.
// `where` is "<source>:<line>" when the problem is tied to an input line.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, std::string where, const std::string& what);

  const std::string& key() const { return key_; }
  const std::string& where() const { return where_; }

 private:
  std::string key_;
  std::string where_;
};

// Parses `key = value` lines ('#' starts a comment) on top of `base`.
ScenarioConfig parse_config(std::string_view text, std::string_view source,
                            ScenarioConfig base = {});

// Reads `path` (empty path = defaults only), applies `key=value` overrides
// in order, then validates.
ScenarioConfig load_config(const std::filesystem::path& path,
                           const std::vector<std::string>& overrides);

// Sets one key from its textual value; used for overrides and sweeps.
void set_config_value(ScenarioConfig& cfg, std::string_view key,
                      std::string_view value, std::string_view where = {});

// Effective configuration in the same `key = value` syntax, each line
// annotated with where its default comes from. Reloading the echo yields
// an identical configuration.
std::string config_echo(const ScenarioConfig& cfg);

std::vector<std::string> config_keys();

// Shortest decimal text that parses back to exactly `value`.
std::string format_double(double value);

}  // namespace uavmec

#endif  // UAVMEC_CONFIG_HPP_
