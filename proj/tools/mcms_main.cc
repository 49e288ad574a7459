// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end.
//
//   mcms sweep-users  [flags]   users-per-cell sweep, CSV "users,SC,MC"
//   mcms sweep-radius [flags]   cell-radius sweep, CSV "radius,SC,MC"
//   mcms solve FILE             greedy / exact / SC objectives of an instance
//   mcms oracle-check [flags]   greedy vs exact on random small instances
//   mcms scenario [flags]       dump one generated scenario as JSON
//
// Settings are resolved as: built-in defaults, then MCMS_SEED (seed only),
// then --config FILE, then explicit flags.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_join.h"
#include "mcms/harness.h"
#include "mcms/io.h"
#include "mcms/scenario.h"
#include "mcms/solvers.h"

namespace {

using mcms::ExperimentConfig;

// Raw flag values; applied to the config only when given on the command line.
struct Flags {
  std::string config_path;
  uint64_t seed = 0;
  int trials = 0;
  int subframes = 0;
  int prbs = 0;
  double rate = 0;
  int cells = 0;
  double radius = 0;
  int users_per_cell = 0;
  std::vector<double> values;
  bool exact = false;
  bool deterministic_fading = false;
  int workers = 0;
  double tx_power = 0;
  double noise_figure = 0;
  double prb_bandwidth = 0;
  std::string out;
  std::string dump_raw;
};

int Fail(const absl::Status& status) {
  std::cerr << "error: " << status << "\n";
  return 1;
}

absl::Status ResolveConfig(const CLI::App& app, const Flags& flags,
                           ExperimentConfig* config) {
  if (const char* env = std::getenv("MCMS_SEED"); env != nullptr) {
    try {
      config->seed = std::stoull(env);
    } catch (const std::exception&) {
      return absl::InvalidArgumentError(
          absl::StrFormat("MCMS_SEED is not an integer: \"%s\"", env));
    }
  }
  if (!flags.config_path.empty()) {
    if (absl::Status s = mcms::ApplyConfigFile(flags.config_path, config);
        !s.ok()) {
      return s;
    }
  }
  auto given = [&](const char* name) { return app.count(name) > 0; };
  if (given("--seed")) config->seed = flags.seed;
  if (given("--trials")) config->trials = flags.trials;
  if (given("--subframes")) config->subframes = flags.subframes;
  if (given("--prbs")) config->prbs = flags.prbs;
  if (given("--rate")) config->stream_rate_bps = flags.rate;
  if (given("--cells")) config->cells = flags.cells;
  if (given("--radius")) config->radius = flags.radius;
  if (given("--users-per-cell")) config->users_per_cell = flags.users_per_cell;
  if (given("--values")) config->sweep_values = flags.values;
  if (given("--exact")) config->run_exact = true;
  if (given("--deterministic-fading")) {
    config->channel.fading = mcms::Fading::kNone;
  }
  if (given("--workers")) config->workers = flags.workers;
  if (given("--tx-power")) config->channel.tx_power_dbm = flags.tx_power;
  if (given("--noise-figure")) {
    config->channel.noise_figure_db = flags.noise_figure;
  }
  if (given("--prb-bandwidth")) {
    config->channel.prb_bandwidth_hz = flags.prb_bandwidth;
  }
  return absl::OkStatus();
}

int RunSweepCommand(const CLI::App& app, const Flags& flags,
                    mcms::SweepAxis axis) {
  ExperimentConfig config;
  config.axis = axis;
  if (absl::Status s = ResolveConfig(app, flags, &config); !s.ok()) {
    return Fail(s);
  }
  if (config.sweep_values.empty()) {
    config.sweep_values = mcms::DefaultSweepValues(axis);
  }
  std::vector<mcms::RawSample> raw;
  absl::StatusOr<mcms::SweepResult> result =
      mcms::RunSweep(config, flags.dump_raw.empty() ? nullptr : &raw);
  if (!result.ok()) return Fail(result.status());

  if (flags.out.empty()) {
    absl::StatusOr<std::string> csv = mcms::FormatCsv(*result);
    if (!csv.ok()) return Fail(csv.status());
    std::cout << *csv;
  } else {
    if (absl::Status s = mcms::WriteCsv(*result, flags.out); !s.ok()) {
      return Fail(s);
    }
    std::ofstream meta(flags.out + ".meta.json", std::ios::trunc);
    meta << mcms::SweepMetadataJson(config, *result).dump(2) << "\n";
    if (!meta) {
      return Fail(absl::DataLossError("failed writing metadata sidecar"));
    }
  }
  if (!flags.dump_raw.empty()) {
    if (absl::Status s = mcms::WriteRawCsv(raw, flags.dump_raw); !s.ok()) {
      return Fail(s);
    }
  }
  return 0;
}

int RunSolveCommand(const std::string& path) {
  absl::StatusOr<mcms::CoverageInstance> instance =
      mcms::ReadInstanceFile(path);
  if (!instance.ok()) return Fail(instance.status());

  absl::StatusOr<mcms::SolveResult> greedy = mcms::SolveGreedy(*instance);
  if (!greedy.ok()) return Fail(greedy.status());
  absl::StatusOr<mcms::SolveResult> sc = mcms::SolveScBaseline(*instance);
  if (!sc.ok()) return Fail(sc.status());

  std::cout << absl::StrFormat("greedy=%d alloc=%s\n", greedy->objective,
                               absl::StrJoin(greedy->alloc.chosen, ","));
  absl::StatusOr<mcms::SolveResult> exact = mcms::SolveExact(*instance);
  if (exact.ok()) {
    std::cout << absl::StrFormat("exact=%d alloc=%s\n", exact->objective,
                                 absl::StrJoin(exact->alloc.chosen, ","));
  } else if (absl::IsResourceExhausted(exact.status())) {
    std::cout << "exact=skipped\n";
    std::cerr << "note: " << exact.status().message() << "\n";
  } else {
    return Fail(exact.status());
  }
  std::cout << absl::StrFormat("sc=%d alloc=%s\n", sc->objective,
                               absl::StrJoin(sc->alloc.chosen, ","));
  std::cout << absl::StrFormat("users=%d\n", instance->num_users);
  return 0;
}

int RunOracleCommand(const CLI::App& app, const Flags& flags) {
  ExperimentConfig config;
  config.trials = 1000;
  if (absl::Status s = ResolveConfig(app, flags, &config); !s.ok()) {
    return Fail(s);
  }
  absl::StatusOr<mcms::OracleCheckStats> stats =
      mcms::RunOracleCheck(config.trials, config.seed);
  if (!stats.ok()) return Fail(stats.status());
  std::cout << absl::StrFormat(
      "instances=%d violations=%d greedy_optimal=%d min_ratio=%.6f "
      "mean_ratio=%.6f bound=%.6f\n",
      stats->instances, stats->violations, stats->greedy_optimal,
      stats->min_ratio, stats->mean_ratio, mcms::kGreedyApproximationRatio);
  return stats->violations == 0 ? 0 : 2;
}

int RunScenarioCommand(const CLI::App& app, const Flags& flags) {
  ExperimentConfig config;
  if (absl::Status s = ResolveConfig(app, flags, &config); !s.ok()) {
    return Fail(s);
  }
  absl::StatusOr<mcms::Scenario> scenario = mcms::GenerateScenario(
      config.cells, config.radius, config.users_per_cell, config.seed);
  if (!scenario.ok()) return Fail(scenario.status());
  const std::string text = mcms::ScenarioToJson(*scenario).dump(2) + "\n";
  if (flags.out.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream file(flags.out, std::ios::trunc);
  file << text;
  return file ? 0 : Fail(absl::DataLossError("failed writing " + flags.out));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-connectivity multicast PRB allocation"};
  app.require_subcommand(1);
  app.fallthrough();

  Flags flags;
  app.add_option("--config", flags.config_path, "JSON config file")
      ->check(CLI::ExistingFile);
  app.add_option("--seed", flags.seed, "Base random seed");
  app.add_option("--trials", flags.trials,
                 "Placements per sweep point (oracle-check: instances)");
  app.add_option("--subframes", flags.subframes, "Sub-frames per placement");
  app.add_option("--prbs", flags.prbs, "PRBs per cell");
  app.add_option("--rate", flags.rate, "Stream rate in bits/s");
  app.add_option("--cells", flags.cells, "Number of cells (1, 7 or 19)");
  app.add_option("--radius", flags.radius, "Cell radius in meters");
  app.add_option("--users-per-cell", flags.users_per_cell, "Users per cell");
  app.add_option("--values", flags.values, "Sweep values, comma separated")
      ->delimiter(',');
  app.add_flag("--exact", flags.exact,
               "Also solve every sub-frame exactly (sweeps)");
  app.add_flag("--deterministic-fading", flags.deterministic_fading,
               "Disable fading (gain fixed at 1)");
  app.add_option("--workers", flags.workers, "Worker threads, 0 = auto");
  app.add_option("--tx-power", flags.tx_power, "Transmit power, dBm per PRB");
  app.add_option("--noise-figure", flags.noise_figure, "Noise figure, dB");
  app.add_option("--prb-bandwidth", flags.prb_bandwidth, "PRB bandwidth, Hz");
  app.add_option("--out", flags.out, "Output file (default stdout)");
  app.add_option("--dump-raw", flags.dump_raw,
                 "Write per-sub-frame unserved counts to this CSV");

  CLI::App* sweep_users =
      app.add_subcommand("sweep-users", "Sweep users per cell");
  CLI::App* sweep_radius =
      app.add_subcommand("sweep-radius", "Sweep cell radius");
  CLI::App* solve = app.add_subcommand("solve", "Solve an instance file");
  std::string instance_path;
  solve->add_option("instance", instance_path, "Instance JSON")
      ->required()
      ->check(CLI::ExistingFile);
  CLI::App* oracle =
      app.add_subcommand("oracle-check", "Greedy vs exact on random instances");
  CLI::App* scenario =
      app.add_subcommand("scenario", "Dump a generated scenario");

  CLI11_PARSE(app, argc, argv);

  if (*sweep_users) {
    return RunSweepCommand(app, flags, mcms::SweepAxis::kUsersPerCell);
  }
  if (*sweep_radius) {
    return RunSweepCommand(app, flags, mcms::SweepAxis::kRadius);
  }
  if (*solve) return RunSolveCommand(instance_path);
  if (*oracle) return RunOracleCommand(app, flags);
  if (*scenario) return RunScenarioCommand(app, flags);
  return 1;
}
