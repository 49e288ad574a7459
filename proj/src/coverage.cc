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

#include "mcms/coverage.h"

#include <algorithm>
#include <vector>

#include "absl/strings/str_format.h"
#include "mcms/user_bitset.h"

namespace mcms {

absl::Status ValidateInstance(const CoverageInstance& instance) {
  const int m = instance.num_users;
  const int c = instance.num_cells;
  const int n = instance.prbs_per_cell;
  if (m < 0) {
    return absl::InvalidArgumentError(
        absl::StrFormat("negative user count %d", m));
  }
  if (c < 1) {
    return absl::InvalidArgumentError(
        absl::StrFormat("need at least one cell, got %d", c));
  }
  if (n < 1) {
    return absl::InvalidArgumentError(
        absl::StrFormat("need at least one PRB per cell, got %d", n));
  }
  if (static_cast<int>(instance.collections.size()) != c) {
    return absl::InvalidArgumentError(
        absl::StrFormat("expected %d cell collections, got %d", c,
                        instance.collections.size()));
  }
  for (int cell = 0; cell < c; ++cell) {
    const auto& sets = instance.collections[cell];
    if (static_cast<int>(sets.size()) != n) {
      return absl::InvalidArgumentError(
          absl::StrFormat("ragged collections: cell %d has %d sets, expected %d",
                          cell, sets.size(), n));
    }
    for (int prb = 0; prb < n; ++prb) {
      const UserSet& users = sets[prb];
      for (size_t i = 0; i < users.size(); ++i) {
        const int k = users[i];
        if (k < 0 || k >= m) {
          return absl::InvalidArgumentError(absl::StrFormat(
              "user %d in set (cell %d, prb %d) is outside [0, %d)", k, cell,
              prb, m));
        }
        if (i > 0 && users[i - 1] >= k) {
          return absl::InvalidArgumentError(absl::StrFormat(
              "set (cell %d, prb %d) is not sorted and duplicate-free", cell,
              prb));
        }
      }
    }
  }
  if (static_cast<int>(instance.primary_cell.size()) != m) {
    return absl::InvalidArgumentError(
        absl::StrFormat("missing primary assignment: %d entries for %d users",
                        instance.primary_cell.size(), m));
  }
  for (int k = 0; k < m; ++k) {
    const int p = instance.primary_cell[k];
    if (p < 0 || p >= c) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "primary cell %d of user %d is outside [0, %d)", p, k, c));
    }
  }
  return absl::OkStatus();
}

absl::Status ValidateAllocation(const CoverageInstance& instance,
                                const Allocation& alloc) {
  if (static_cast<int>(alloc.chosen.size()) != instance.num_cells) {
    return absl::InvalidArgumentError(
        absl::StrFormat("allocation has %d entries, instance has %d cells",
                        alloc.chosen.size(), instance.num_cells));
  }
  for (int c = 0; c < instance.num_cells; ++c) {
    const int j = alloc.chosen[c];
    if (j < 0 || j >= instance.prbs_per_cell) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "cell %d allocated PRB %d outside [0, %d)", c, j,
          instance.prbs_per_cell));
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<UserSet> ServedMc(const CoverageInstance& instance,
                                 const Allocation& alloc) {
  if (absl::Status s = ValidateAllocation(instance, alloc); !s.ok()) return s;
  UserBitset served(instance.num_users);
  for (int c = 0; c < instance.num_cells; ++c) {
    for (int k : instance.collections[c][alloc.chosen[c]]) served.Set(k);
  }
  return served.Members();
}

absl::StatusOr<UserSet> ServedSc(const CoverageInstance& instance,
                                 const Allocation& alloc) {
  if (absl::Status s = ValidateAllocation(instance, alloc); !s.ok()) return s;
  UserSet served;
  for (int c = 0; c < instance.num_cells; ++c) {
    for (int k : instance.collections[c][alloc.chosen[c]]) {
      if (instance.primary_cell[k] == c) served.push_back(k);
    }
  }
  std::sort(served.begin(), served.end());
  return served;
}

absl::StatusOr<int> Objective(const CoverageInstance& instance,
                              const Allocation& alloc, ServiceMode mode) {
  absl::StatusOr<UserSet> served = mode == ServiceMode::kMultiConnectivity
                                       ? ServedMc(instance, alloc)
                                       : ServedSc(instance, alloc);
  if (!served.ok()) return served.status();
  return static_cast<int>(served->size());
}

absl::StatusOr<ServedReport> Evaluate(const CoverageInstance& instance,
                                      const Allocation& alloc) {
  absl::StatusOr<UserSet> mc = ServedMc(instance, alloc);
  if (!mc.ok()) return mc.status();
  absl::StatusOr<UserSet> sc = ServedSc(instance, alloc);
  if (!sc.ok()) return sc.status();
  ServedReport report;
  report.unserved_mc = instance.num_users - static_cast<int>(mc->size());
  report.unserved_sc = instance.num_users - static_cast<int>(sc->size());
  report.served_mc = *std::move(mc);
  report.served_sc = *std::move(sc);
  return report;
}

}  // namespace mcms
