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

#ifndef MCMS_SOLVERS_H_
#define MCMS_SOLVERS_H_

#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"
#include "mcms/coverage.h"

namespace mcms {

// 1 - 1/e, the guaranteed fraction of the optimum reached by the greedy
// allocators below.
inline constexpr double kGreedyApproximationRatio = 0.63212055882855767;

inline constexpr int64_t kDefaultEnumerationBudget = 10'000'000;

// True iff greedy >= (1 - 1/e) * optimum, with a 1e-9 guard against
// rounding in the product.
inline bool MeetsApproximationBound(int greedy, int optimum) {
  return greedy >= kGreedyApproximationRatio * optimum - 1e-9;
}

struct SolveResult {
  Allocation alloc;
  // Served users under `mode`. The greedy and exact solvers report MC, the
  // single-connectivity baseline reports SC.
  int objective = 0;
  ServiceMode mode = ServiceMode::kMultiConnectivity;
  // Newly covered users at each greedy iteration, in pick order. Empty for
  // the other solvers.
  std::vector<int> per_step_marginals;

  bool operator==(const SolveResult&) const = default;
};

// Centralized greedy allocation. Runs C iterations; each picks, among cells
// not yet allocated, the (cell, PRB) set covering the most still-unserved
// users, then retires that cell. Ties go to the lowest cell index, then the
// lowest PRB index, so zero-gain steps allocate PRB 0 of the lowest remaining
// cell.
absl::StatusOr<SolveResult> SolveGreedy(const CoverageInstance& instance);

// Exhaustive search over all N^C allocations. Returns the lexicographically
// smallest allocation among those with maximum MC objective.
// ResourceExhausted if N^C exceeds `budget`.
absl::StatusOr<SolveResult> SolveExact(
    const CoverageInstance& instance,
    int64_t budget = kDefaultEnumerationBudget);

// Single-connectivity baseline: each cell independently picks the PRB that
// serves most of its own primary users (lowest index on ties). This is the
// SC optimum since cells do not interact under SC.
absl::StatusOr<SolveResult> SolveScBaseline(const CoverageInstance& instance);

// Maximum coverage: choose at most `budget` of `sets` to maximize the number
// of covered elements of `universe`.
struct McpInstance {
  UserSet universe;
  std::vector<UserSet> sets;
  int budget = 0;
};

struct McpResult {
  std::vector<int> chosen;  // indices into McpInstance::sets, pick order
  int covered = 0;
};

absl::Status ValidateMcpInstance(const McpInstance& mcp);

// Classic greedy for maximum coverage: up to `budget` picks of the set with
// the largest marginal gain (lowest index on ties), stopping early once no
// remaining set adds anything.
absl::StatusOr<McpResult> SolveMcpGreedy(const McpInstance& mcp);

}  // namespace mcms

#endif  // MCMS_SOLVERS_H_
