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

// Monte Carlo experiment engine.
//
// A sweep varies either users per cell or the cell radius. For every sweep
// value it runs `trials` independent user placements and, per placement,
// `subframes` fading realizations. Each sub-frame is allocated twice: by the
// greedy multi-connectivity allocator and by the single-connectivity
// baseline. Reported numbers are arithmetic means of the per-sub-frame
// unserved counts over all trials x subframes samples.
//
// Random streams are derived from (seed, trial) for user placement and from
// (seed, trial, subframe) for fading, so results do not depend on the number
// of worker threads or on scheduling.

#ifndef MCMS_HARNESS_H_
#define MCMS_HARNESS_H_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "mcms/coverage.h"
#include "mcms/scenario.h"

namespace mcms {

// Stream rate used when none is given. Chosen so that with the default
// channel, 7 cells, 4 PRBs, 175 users per cell and a 300 m radius the
// single-connectivity baseline leaves a small but nonzero number of users
// unserved per sub-frame.
inline constexpr double kDefaultStreamRateBps = 1.4e6;

enum class SweepAxis { kUsersPerCell, kRadius };

struct ExperimentConfig {
  int cells = 7;
  double radius = 300.0;
  int users_per_cell = 175;
  int prbs = 4;
  double stream_rate_bps = kDefaultStreamRateBps;
  int subframes = 100;
  int trials = 20;
  uint64_t seed = 1;
  SweepAxis axis = SweepAxis::kUsersPerCell;
  // Values of the swept parameter; strictly increasing. Users-per-cell
  // values must be whole numbers.
  std::vector<double> sweep_values;
  ChannelParams channel;
  // Also solve every sub-frame exactly and report the optimum.
  bool run_exact = false;
  // 0 means one per hardware thread.
  int workers = 0;
};

// 100, 125, ..., 250 users per cell or 200, 250, ..., 400 m.
std::vector<double> DefaultSweepValues(SweepAxis axis);

absl::Status ValidateConfig(const ExperimentConfig& config);

// Deterministic generator for the stream identified by `ids` under `seed`.
std::mt19937_64 StreamRng(uint64_t seed, std::initializer_list<uint64_t> ids);

struct SubframeOutcome {
  int unserved_mc = 0;
  int unserved_sc = 0;
  std::optional<int> unserved_exact;
};

// Samples one sub-frame, derives the coverage instance and allocates it with
// the greedy and SC-baseline solvers (and optionally the exact one). Fails
// with Internal if a solver's reported objective disagrees with the
// coverage evaluation of its own allocation.
absl::StatusOr<SubframeOutcome> RunSubframe(const Scenario& scenario,
                                            const LinkBudget& budget,
                                            const StreamSpec& stream,
                                            int num_prbs, int subframe,
                                            std::mt19937_64& rng,
                                            bool run_exact = false);
absl::StatusOr<SubframeOutcome> RunSubframe(const Scenario& scenario,
                                            const ChannelParams& params,
                                            const StreamSpec& stream,
                                            int num_prbs, int subframe,
                                            std::mt19937_64& rng,
                                            bool run_exact = false);

struct SweepPoint {
  double x = 0.0;
  double mean_unserved_sc = 0.0;
  double mean_unserved_mc = 0.0;
  double stddev_unserved_sc = 0.0;
  double stddev_unserved_mc = 0.0;
  std::optional<double> mean_unserved_exact;
  int num_users = 0;
  int trials = 0;
  int samples = 0;  // trials * subframes
};

struct SweepResult {
  SweepAxis axis = SweepAxis::kUsersPerCell;
  std::vector<SweepPoint> points;
};

// One per-sub-frame record, as written by the raw dump.
struct RawSample {
  double x = 0.0;
  int trial = 0;
  int subframe = 0;
  int unserved_sc = 0;
  int unserved_mc = 0;
};

// Runs the full sweep. When `raw` is non-null it receives every per-sub-frame
// sample ordered by (sweep point, trial, subframe).
absl::StatusOr<SweepResult> RunSweep(const ExperimentConfig& config,
                                     std::vector<RawSample>* raw = nullptr);

// "users,SC,MC" or "radius,SC,MC".
std::string CsvHeader(SweepAxis axis);

absl::StatusOr<std::string> FormatCsv(const SweepResult& result);

// Writes FormatCsv(result) to `path`. Nothing is written for an empty result.
absl::Status WriteCsv(const SweepResult& result, const std::string& path);

absl::Status WriteRawCsv(const std::vector<RawSample>& samples,
                         const std::string& path);

// Random coverage instances for oracle cross-checks.
struct RandomInstanceLimits {
  int max_cells = 5;
  int max_prbs = 4;
  int max_users = 25;
};

CoverageInstance RandomCoverageInstance(std::mt19937_64& rng,
                                        const RandomInstanceLimits& limits);

struct OracleCheckStats {
  int instances = 0;
  int violations = 0;        // greedy below (1 - 1/e) * optimum
  int greedy_optimal = 0;    // greedy matched the optimum
  double min_ratio = 1.0;    // greedy / optimum, 1 when optimum is 0
  double mean_ratio = 0.0;
};

// Solves `instances` random instances with the greedy and exact solvers and
// summarizes greedy / optimum.
absl::StatusOr<OracleCheckStats> RunOracleCheck(
    int instances, uint64_t seed, const RandomInstanceLimits& limits = {});

}  // namespace mcms

#endif  // MCMS_HARNESS_H_
