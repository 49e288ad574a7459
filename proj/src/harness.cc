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

#include "mcms/harness.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "mcms/solvers.h"

namespace mcms {
namespace {

// Distinguishes the placement stream from the per-sub-frame fading streams.
constexpr uint64_t kPlacementStream = 0;
constexpr uint64_t kFadingStream = 1;

struct TrialOutput {
  int num_users = 0;
  std::vector<SubframeOutcome> subframes;
};

absl::StatusOr<TrialOutput> RunTrial(const ExperimentConfig& config,
                                     double x, int trial) {
  int users_per_cell = config.users_per_cell;
  double radius = config.radius;
  if (config.axis == SweepAxis::kUsersPerCell) {
    users_per_cell = static_cast<int>(x);
  } else {
    radius = x;
  }
  std::mt19937_64 placement_rng = StreamRng(
      config.seed, {kPlacementStream, static_cast<uint64_t>(trial)});
  absl::StatusOr<Scenario> scenario =
      GenerateScenario(config.cells, radius, users_per_cell, placement_rng);
  if (!scenario.ok()) return scenario.status();

  const LinkBudget budget(*scenario, config.channel);
  const StreamSpec stream{config.stream_rate_bps};
  TrialOutput out;
  out.num_users = scenario->num_users();
  out.subframes.reserve(config.subframes);
  for (int t = 0; t < config.subframes; ++t) {
    std::mt19937_64 rng =
        StreamRng(config.seed, {kFadingStream, static_cast<uint64_t>(trial),
                                static_cast<uint64_t>(t)});
    absl::StatusOr<SubframeOutcome> outcome = RunSubframe(
        *scenario, budget, stream, config.prbs, t, rng, config.run_exact);
    if (!outcome.ok()) return outcome.status();
    out.subframes.push_back(*outcome);
  }
  return out;
}

double SampleStddev(int64_t sum, double sum_sq, int n) {
  if (n < 2) return 0.0;
  const double mean = static_cast<double>(sum) / n;
  const double var = (sum_sq - n * mean * mean) / (n - 1);
  return std::sqrt(std::max(var, 0.0));
}

}  // namespace

std::vector<double> DefaultSweepValues(SweepAxis axis) {
  if (axis == SweepAxis::kUsersPerCell) {
    return {100, 125, 150, 175, 200, 225, 250};
  }
  return {200, 250, 300, 350, 400};
}

absl::Status ValidateConfig(const ExperimentConfig& config) {
  if (config.trials < 1) {
    return absl::InvalidArgumentError("trials must be at least 1");
  }
  if (config.subframes < 1) {
    return absl::InvalidArgumentError("subframes must be at least 1");
  }
  if (config.prbs < 1) {
    return absl::InvalidArgumentError("prbs must be at least 1");
  }
  if (!(config.stream_rate_bps > 0.0)) {
    return absl::InvalidArgumentError("stream rate must be positive");
  }
  if (config.workers < 0) {
    return absl::InvalidArgumentError("workers must be non-negative");
  }
  if (config.sweep_values.empty()) {
    return absl::InvalidArgumentError("sweep has no values");
  }
  for (size_t i = 1; i < config.sweep_values.size(); ++i) {
    if (!(config.sweep_values[i] > config.sweep_values[i - 1])) {
      return absl::InvalidArgumentError(
          "sweep values must be strictly increasing");
    }
  }
  for (double v : config.sweep_values) {
    if (config.axis == SweepAxis::kUsersPerCell &&
        (v < 0 || v != std::floor(v))) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "users per cell must be a non-negative integer, got %g", v));
    }
    if (config.axis == SweepAxis::kRadius && !(v > 0)) {
      return absl::InvalidArgumentError(
          absl::StrFormat("radius must be positive, got %g", v));
    }
  }
  if (config.axis == SweepAxis::kUsersPerCell && !(config.radius > 0)) {
    return absl::InvalidArgumentError("radius must be positive");
  }
  if (config.axis == SweepAxis::kRadius && config.users_per_cell < 0) {
    return absl::InvalidArgumentError("users per cell must be non-negative");
  }
  if (absl::Status s = HexLayout(config.cells, 1.0).status(); !s.ok()) {
    return s;
  }
  return ValidateChannelParams(config.channel);
}

std::mt19937_64 StreamRng(uint64_t seed, std::initializer_list<uint64_t> ids) {
  std::vector<uint32_t> words = {static_cast<uint32_t>(seed),
                                 static_cast<uint32_t>(seed >> 32)};
  for (uint64_t id : ids) {
    words.push_back(static_cast<uint32_t>(id));
    words.push_back(static_cast<uint32_t>(id >> 32));
  }
  std::seed_seq seq(words.begin(), words.end());
  return std::mt19937_64(seq);
}

absl::StatusOr<SubframeOutcome> RunSubframe(const Scenario& scenario,
                                            const LinkBudget& budget,
                                            const StreamSpec& stream,
                                            int num_prbs, int subframe,
                                            std::mt19937_64& rng,
                                            bool run_exact) {
  const RateRealization rates = SampleRates(budget, num_prbs, subframe, rng);
  const CoverageInstance instance = DeriveInstance(scenario, rates, stream);

  absl::StatusOr<SolveResult> mc = SolveGreedy(instance);
  if (!mc.ok()) return mc.status();
  absl::StatusOr<SolveResult> sc = SolveScBaseline(instance);
  if (!sc.ok()) return sc.status();

  absl::StatusOr<int> mc_check =
      Objective(instance, mc->alloc, ServiceMode::kMultiConnectivity);
  absl::StatusOr<int> sc_check =
      Objective(instance, sc->alloc, ServiceMode::kSingleConnectivity);
  if (!mc_check.ok()) return mc_check.status();
  if (!sc_check.ok()) return sc_check.status();
  if (*mc_check != mc->objective || *sc_check != sc->objective) {
    return absl::InternalError(absl::StrFormat(
        "sub-frame %d: solver objectives (MC %d, SC %d) disagree with "
        "evaluation (MC %d, SC %d)",
        subframe, mc->objective, sc->objective, *mc_check, *sc_check));
  }

  SubframeOutcome out;
  out.unserved_mc = instance.num_users - mc->objective;
  out.unserved_sc = instance.num_users - sc->objective;
  if (run_exact) {
    absl::StatusOr<SolveResult> exact = SolveExact(instance);
    if (!exact.ok()) return exact.status();
    out.unserved_exact = instance.num_users - exact->objective;
  }
  return out;
}

absl::StatusOr<SubframeOutcome> RunSubframe(const Scenario& scenario,
                                            const ChannelParams& params,
                                            const StreamSpec& stream,
                                            int num_prbs, int subframe,
                                            std::mt19937_64& rng,
                                            bool run_exact) {
  return RunSubframe(scenario, LinkBudget(scenario, params), stream, num_prbs,
                     subframe, rng, run_exact);
}

absl::StatusOr<SweepResult> RunSweep(const ExperimentConfig& config,
                                     std::vector<RawSample>* raw) {
  if (absl::Status s = ValidateConfig(config); !s.ok()) return s;
  const int num_points = static_cast<int>(config.sweep_values.size());
  const int num_tasks = num_points * config.trials;

  std::vector<absl::StatusOr<TrialOutput>> outputs(
      num_tasks, absl::UnknownError("not run"));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int task = next++; task < num_tasks; task = next++) {
      const int point = task / config.trials;
      const int trial = task % config.trials;
      outputs[task] = RunTrial(config, config.sweep_values[point], trial);
    }
  };
  int workers = config.workers > 0
                    ? config.workers
                    : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::clamp(workers, 1, num_tasks);
  std::vector<std::jthread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  pool.clear();

  SweepResult result;
  result.axis = config.axis;
  if (raw != nullptr) raw->clear();
  for (int point = 0; point < num_points; ++point) {
    SweepPoint row;
    row.x = config.sweep_values[point];
    row.trials = config.trials;
    int64_t sum_sc = 0, sum_mc = 0, sum_exact = 0;
    double sq_sc = 0.0, sq_mc = 0.0;
    int n = 0;
    for (int trial = 0; trial < config.trials; ++trial) {
      const absl::StatusOr<TrialOutput>& out =
          outputs[point * config.trials + trial];
      if (!out.ok()) return out.status();
      row.num_users = out->num_users;
      for (int t = 0; t < config.subframes; ++t) {
        const SubframeOutcome& s = out->subframes[t];
        sum_sc += s.unserved_sc;
        sum_mc += s.unserved_mc;
        sq_sc += static_cast<double>(s.unserved_sc) * s.unserved_sc;
        sq_mc += static_cast<double>(s.unserved_mc) * s.unserved_mc;
        if (s.unserved_exact.has_value()) sum_exact += *s.unserved_exact;
        ++n;
        if (raw != nullptr) {
          raw->push_back({row.x, trial, t, s.unserved_sc, s.unserved_mc});
        }
      }
    }
    row.samples = n;
    row.mean_unserved_sc = static_cast<double>(sum_sc) / n;
    row.mean_unserved_mc = static_cast<double>(sum_mc) / n;
    row.stddev_unserved_sc = SampleStddev(sum_sc, sq_sc, n);
    row.stddev_unserved_mc = SampleStddev(sum_mc, sq_mc, n);
    if (config.run_exact) {
      row.mean_unserved_exact = static_cast<double>(sum_exact) / n;
    }
    result.points.push_back(row);
  }
  return result;
}

std::string CsvHeader(SweepAxis axis) {
  return axis == SweepAxis::kUsersPerCell ? "users,SC,MC" : "radius,SC,MC";
}

absl::StatusOr<std::string> FormatCsv(const SweepResult& result) {
  if (result.points.empty()) {
    return absl::FailedPreconditionError("sweep result has no rows");
  }
  std::string out = absl::StrCat(CsvHeader(result.axis), "\n");
  for (const SweepPoint& p : result.points) {
    absl::StrAppendFormat(&out, "%g,%.4f,%.4f\n", p.x, p.mean_unserved_sc,
                          p.mean_unserved_mc);
  }
  return out;
}

absl::Status WriteCsv(const SweepResult& result, const std::string& path) {
  absl::StatusOr<std::string> csv = FormatCsv(result);
  if (!csv.ok()) return csv.status();
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    return absl::UnavailableError(absl::StrCat("cannot open ", path));
  }
  file << *csv;
  if (!file.flush()) {
    return absl::DataLossError(absl::StrCat("failed writing ", path));
  }
  return absl::OkStatus();
}

absl::Status WriteRawCsv(const std::vector<RawSample>& samples,
                         const std::string& path) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    return absl::UnavailableError(absl::StrCat("cannot open ", path));
  }
  file << "x,trial,subframe,SC,MC\n";
  for (const RawSample& s : samples) {
    file << absl::StrFormat("%g,%d,%d,%d,%d\n", s.x, s.trial, s.subframe,
                            s.unserved_sc, s.unserved_mc);
  }
  if (!file.flush()) {
    return absl::DataLossError(absl::StrCat("failed writing ", path));
  }
  return absl::OkStatus();
}

CoverageInstance RandomCoverageInstance(std::mt19937_64& rng,
                                        const RandomInstanceLimits& limits) {
  CoverageInstance instance;
  instance.num_cells =
      std::uniform_int_distribution<int>(1, limits.max_cells)(rng);
  instance.prbs_per_cell =
      std::uniform_int_distribution<int>(1, limits.max_prbs)(rng);
  instance.num_users =
      std::uniform_int_distribution<int>(1, limits.max_users)(rng);
  // Density varies per instance so both sparse and heavily overlapping
  // coverage show up.
  std::bernoulli_distribution member(
      std::uniform_real_distribution<double>(0.05, 0.6)(rng));
  instance.collections.assign(instance.num_cells,
                              std::vector<UserSet>(instance.prbs_per_cell));
  for (auto& cell : instance.collections) {
    for (UserSet& users : cell) {
      for (int k = 0; k < instance.num_users; ++k) {
        if (member(rng)) users.push_back(k);
      }
    }
  }
  std::uniform_int_distribution<int> cell(0, instance.num_cells - 1);
  for (int k = 0; k < instance.num_users; ++k) {
    instance.primary_cell.push_back(cell(rng));
  }
  return instance;
}

absl::StatusOr<OracleCheckStats> RunOracleCheck(
    int instances, uint64_t seed, const RandomInstanceLimits& limits) {
  if (instances < 1) {
    return absl::InvalidArgumentError("need at least one instance");
  }
  std::mt19937_64 rng(seed);
  OracleCheckStats stats;
  double ratio_sum = 0.0;
  for (int i = 0; i < instances; ++i) {
    const CoverageInstance instance = RandomCoverageInstance(rng, limits);
    absl::StatusOr<SolveResult> greedy = SolveGreedy(instance);
    if (!greedy.ok()) return greedy.status();
    absl::StatusOr<SolveResult> exact = SolveExact(instance);
    if (!exact.ok()) return exact.status();
    const double ratio =
        exact->objective == 0
            ? 1.0
            : static_cast<double>(greedy->objective) / exact->objective;
    ++stats.instances;
    ratio_sum += ratio;
    stats.min_ratio = std::min(stats.min_ratio, ratio);
    if (greedy->objective == exact->objective) ++stats.greedy_optimal;
    if (!MeetsApproximationBound(greedy->objective, exact->objective)) {
      ++stats.violations;
    }
  }
  stats.mean_ratio = ratio_sum / stats.instances;
  return stats;
}

}  // namespace mcms
