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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "uavmec/config.hpp"

namespace uavmec {
namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path;
}

TEST_CASE("empty file gives valid defaults") {
  const auto path = write_temp("uavmec_empty.cfg", "");
  const ScenarioConfig cfg = load_config(path, {});
  CHECK(cfg.num_uds == 20);
  CHECK(cfg.num_slots == 80);
  CHECK(cfg.uav.initial_position == Vec2{200, 200});
  CHECK(cfg.seeds.size() == 10);
  CHECK(cfg.budget_compute() + cfg.budget_propulsion() == doctest::Approx(220.0));
  CHECK_NOTHROW(cfg.validate());
  std::filesystem::remove(path);
}

TEST_CASE("overrides win and show in the echo") {
  const auto path = write_temp("uavmec_base.cfg", "sim.T = 100\nlyapunov.V = 7\n");
  const ScenarioConfig cfg = load_config(path, {"sim.T=2000"});
  CHECK(cfg.num_slots == 2000);
  CHECK(cfg.v_param == 7.0);
  const std::string echo = config_echo(cfg);
  CHECK(echo.find("sim.T = 2000  # set") != std::string::npos);
  CHECK(echo.find("sim.M = 20  # reference") != std::string::npos);
  CHECK(echo.find("lyapunov.V = 7  # set") != std::string::npos);
  CHECK(echo.find("energy.budget = 220  # assumed") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("errors name the key and the line") {
  const auto path = write_temp("uavmec_bad.cfg", "# comment\nsim.T = 10\nuav.v_max = -1\n");
  try {
    load_config(path, {});
    FAIL("expected a validation error");
  } catch (const ConfigError& e) {
    CHECK(e.key() == "uav.v_max");
    CHECK(std::string(e.what()).find(":3: uav.v_max") != std::string::npos);
  }
  CHECK_THROWS_WITH_AS(load_config({}, {"sim.bogus=1"}),
                       doctest::Contains("unknown key"), ConfigError);
  CHECK_THROWS_WITH_AS(load_config({}, {"sim.T=abc"}),
                       doctest::Contains("type mismatch"), ConfigError);
  CHECK_THROWS_WITH_AS(load_config({}, {"sim.schemes=OJOA,XYZ"}),
                       doctest::Contains("sim.schemes"), ConfigError);
  CHECK_THROWS_WITH_AS(load_config({}, {"uav.v_max=-1"}),
                       doctest::Contains("override:1: uav.v_max"), ConfigError);
  std::filesystem::remove(path);
}

TEST_CASE("sweeps are validated per value") {
  CHECK_NOTHROW(load_config({}, {"sweep.key=lyapunov.V", "sweep.values=5,50,500"}));
  CHECK_THROWS_AS(load_config({}, {"sweep.key=lyapunov.V", "sweep.values=5,-1"}), ConfigError);
  CHECK_THROWS_AS(load_config({}, {"sweep.key=sim.schemes", "sweep.values=1"}), ConfigError);
  CHECK_THROWS_AS(load_config({}, {"sweep.values=1"}), ConfigError);
}

TEST_CASE("echo reloads to the same configuration") {
  ScenarioConfig cfg = load_config({}, {"sim.seeds=3,9", "channel.kappa=0.35",
                                        "sim.schemes=ELC,OJOA", "uav.c4=0.1234567890123"});
  const std::string echo = config_echo(cfg);
  const ScenarioConfig again = parse_config(echo, "echo");
  CHECK(config_echo(again) == echo);
  CHECK(again.channel.kappa == cfg.channel.kappa);
  CHECK(again.uav.c4 == cfg.uav.c4);
}

TEST_CASE("numbers round-trip exactly") {
  for (double v : {0.1, 1.0 / 3.0, 1e-27, 6.02214076e23, 356.2981405896268, -0.0}) {
    CHECK(std::strtod(format_double(v).c_str(), nullptr) == v);
  }
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(2000.0) == "2000");
}

TEST_CASE("scheme names") {
  for (SchemeKind s : kAllSchemes) CHECK(parse_scheme(scheme_name(s)) == s);
  CHECK_FALSE(parse_scheme("ojoa").has_value());
}

}  // namespace
}  // namespace uavmec
