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

#include "mcms/solvers.h"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"
#include "mcms/user_bitset.h"

namespace mcms {
namespace {

using CellBitsets = std::vector<std::vector<UserBitset>>;

CellBitsets ToBitsets(const CoverageInstance& instance) {
  CellBitsets out(instance.num_cells);
  for (int c = 0; c < instance.num_cells; ++c) {
    out[c].reserve(instance.prbs_per_cell);
    for (const UserSet& users : instance.collections[c]) {
      out[c].emplace_back(instance.num_users, users);
    }
  }
  return out;
}

// N^C, or -1 on int64 overflow.
int64_t AllocationCount(int prbs, int cells) {
  int64_t total = 1;
  for (int c = 0; c < cells; ++c) {
    if (total > std::numeric_limits<int64_t>::max() / prbs) return -1;
    total *= prbs;
  }
  return total;
}

}  // namespace

absl::StatusOr<SolveResult> SolveGreedy(const CoverageInstance& instance) {
  if (absl::Status s = ValidateInstance(instance); !s.ok()) return s;
  const CellBitsets sets = ToBitsets(instance);
  const int num_cells = instance.num_cells;

  SolveResult result;
  result.alloc.chosen.assign(num_cells, -1);
  result.per_step_marginals.reserve(num_cells);
  UserBitset covered(instance.num_users);
  std::vector<bool> allocated(num_cells, false);

  for (int step = 0; step < num_cells; ++step) {
    int best_cell = -1;
    int best_prb = -1;
    int best_gain = -1;
    for (int c = 0; c < num_cells; ++c) {
      if (allocated[c]) continue;
      for (int j = 0; j < instance.prbs_per_cell; ++j) {
        const int gain = sets[c][j].CountNotIn(covered);
        if (gain > best_gain) {
          best_gain = gain;
          best_cell = c;
          best_prb = j;
        }
      }
    }
    covered |= sets[best_cell][best_prb];
    allocated[best_cell] = true;
    result.alloc.chosen[best_cell] = best_prb;
    result.per_step_marginals.push_back(best_gain);
  }
  result.objective = covered.Count();
  return result;
}

absl::StatusOr<SolveResult> SolveExact(const CoverageInstance& instance,
                                       int64_t budget) {
  if (absl::Status s = ValidateInstance(instance); !s.ok()) return s;
  const int num_cells = instance.num_cells;
  const int num_prbs = instance.prbs_per_cell;
  const int64_t total = AllocationCount(num_prbs, num_cells);
  if (total < 0 || total > budget) {
    return absl::ResourceExhaustedError(absl::StrFormat(
        "exhaustive search needs %d^%d = %s allocations, budget is %d",
        num_prbs, num_cells,
        total < 0 ? std::string("overflow") : absl::StrFormat("%d", total),
        budget));
  }
  const CellBitsets sets = ToBitsets(instance);

  // Odometer over allocation vectors in lexicographic order. prefix[c] holds
  // the union of the sets chosen for cells [0, c).
  std::vector<int> current(num_cells, 0);
  std::vector<UserBitset> prefix(num_cells + 1, UserBitset(instance.num_users));
  for (int c = 0; c < num_cells; ++c) {
    prefix[c + 1] = prefix[c] | sets[c][0];
  }

  SolveResult best;
  best.objective = -1;
  while (true) {
    const int value = prefix[num_cells].Count();
    // Strict improvement keeps the lexicographically smallest maximizer.
    if (value > best.objective) {
      best.objective = value;
      best.alloc.chosen = current;
      if (value == instance.num_users) break;
    }
    int c = num_cells - 1;
    while (c >= 0 && current[c] == num_prbs - 1) --c;
    if (c < 0) break;
    ++current[c];
    for (int d = c + 1; d < num_cells; ++d) current[d] = 0;
    for (int d = c; d < num_cells; ++d) {
      prefix[d + 1] = prefix[d] | sets[d][current[d]];
    }
  }
  return best;
}

absl::StatusOr<SolveResult> SolveScBaseline(const CoverageInstance& instance) {
  if (absl::Status s = ValidateInstance(instance); !s.ok()) return s;
  SolveResult result;
  result.mode = ServiceMode::kSingleConnectivity;
  result.alloc.chosen.assign(instance.num_cells, 0);
  for (int c = 0; c < instance.num_cells; ++c) {
    int best = -1;
    for (int j = 0; j < instance.prbs_per_cell; ++j) {
      const UserSet& users = instance.collections[c][j];
      const int own = static_cast<int>(
          std::count_if(users.begin(), users.end(), [&](int k) {
            return instance.primary_cell[k] == c;
          }));
      if (own > best) {
        best = own;
        result.alloc.chosen[c] = j;
      }
    }
    result.objective += best;
  }
  return result;
}

absl::Status ValidateMcpInstance(const McpInstance& mcp) {
  if (mcp.budget < 0) {
    return absl::InvalidArgumentError(
        absl::StrFormat("negative budget %d", mcp.budget));
  }
  if (!std::is_sorted(mcp.universe.begin(), mcp.universe.end()) ||
      std::adjacent_find(mcp.universe.begin(), mcp.universe.end()) !=
          mcp.universe.end()) {
    return absl::InvalidArgumentError("universe is not sorted and unique");
  }
  if (!mcp.universe.empty() && mcp.universe.front() < 0) {
    return absl::InvalidArgumentError("negative element in universe");
  }
  for (size_t i = 0; i < mcp.sets.size(); ++i) {
    for (int e : mcp.sets[i]) {
      if (!std::binary_search(mcp.universe.begin(), mcp.universe.end(), e)) {
        return absl::InvalidArgumentError(absl::StrFormat(
            "set %d contains %d, which is not in the universe", i, e));
      }
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<McpResult> SolveMcpGreedy(const McpInstance& mcp) {
  if (absl::Status s = ValidateMcpInstance(mcp); !s.ok()) return s;
  const int width = mcp.universe.empty() ? 0 : mcp.universe.back() + 1;
  std::vector<UserBitset> sets;
  sets.reserve(mcp.sets.size());
  for (const UserSet& t : mcp.sets) sets.emplace_back(width, t);

  McpResult result;
  UserBitset covered(width);
  std::vector<bool> used(sets.size(), false);
  for (int step = 0; step < mcp.budget; ++step) {
    int best = -1;
    int best_gain = 0;
    for (size_t i = 0; i < sets.size(); ++i) {
      if (used[i]) continue;
      const int gain = sets[i].CountNotIn(covered);
      if (gain > best_gain) {
        best_gain = gain;
        best = static_cast<int>(i);
      }
    }
    if (best < 0) break;
    used[best] = true;
    covered |= sets[best];
    result.chosen.push_back(best);
  }
  result.covered = covered.Count();
  return result;
}

}  // namespace mcms
