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

// Command-line front end.
//
//   uavmec run [config] [key=value ...]
//   uavmec summarize metrics.json [...]
//   uavmec selftest [--quick]

#include <cstdlib>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "checks.hpp"
#include "uavmec/config.hpp"
#include "uavmec/experiment.hpp"

namespace {

int cmd_run(const std::string& config_path, const std::vector<std::string>& overrides) {
  const uavmec::ScenarioConfig cfg = uavmec::load_config(config_path, overrides);
  const int status = uavmec::run_experiment(cfg);
  const auto dir = uavmec::resolve_output_dir(cfg);
  std::cout << "wrote " << (dir / "slots.csv").string() << ", "
            << (dir / "metrics.json").string() << ", "
            << (dir / "config_echo.txt").string() << "\n";
  if (status != 0) std::cerr << "some episodes were aborted; see metrics.json\n";
  return status;
}

int cmd_summarize(const std::vector<std::string>& files) {
  std::vector<std::filesystem::path> paths(files.begin(), files.end());
  const uavmec::Summary s = uavmec::summarize(paths);
  std::cout << s.table;
  return s.all_passed() ? 0 : 2;
}

int cmd_selftest(bool quick) {
  const auto results = uavmec::checks::run_all(quick ? uavmec::checks::Scale::kQuick
                                                     : uavmec::checks::Scale::kFull);
  bool ok = true;
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.name << "  " << r.detail
              << "\n";
    ok = ok && r.passed;
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"UAV-assisted edge computing simulator"};
  app.require_subcommand(1);

  std::string config_path;
  std::vector<std::string> overrides;
  CLI::App* run = app.add_subcommand("run", "run an experiment");
  run->add_option("config", config_path, "key = value config file (optional)");
  run->add_option("overrides", overrides, "key=value overrides");
  run->allow_extras(false);

  std::vector<std::string> metrics;
  CLI::App* summarize = app.add_subcommand("summarize", "compare schemes across seeds");
  summarize->add_option("metrics", metrics, "metrics.json files")->required();

  bool quick = false;
  CLI::App* selftest = app.add_subcommand("selftest", "run the oracle and property checks");
  selftest->add_flag("--quick", quick, "smaller instance counts");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      // A first positional containing '=' is an override, not a file.
      if (config_path.find('=') != std::string::npos) {
        overrides.insert(overrides.begin(), config_path);
        config_path.clear();
      }
      return cmd_run(config_path, overrides);
    }
    if (*summarize) return cmd_summarize(metrics);
    if (*selftest) return cmd_selftest(quick);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
