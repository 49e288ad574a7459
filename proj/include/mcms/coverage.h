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

// Problem representation for multi-connectivity multicast PRB allocation.
//
// A CoverageInstance lists, for every cell c and every PRB j of that cell,
// the set of users that can decode the multicast stream if cell c transmits
// it on PRB j. An Allocation picks exactly one PRB per cell. Under
// multi-connectivity (MC) a user is served when any chosen (cell, PRB) set
// contains it; under single connectivity (SC) only the set chosen by the
// user's primary cell counts.
//
// All ids (users, cells, PRBs) are 0-based.

#ifndef MCMS_COVERAGE_H_
#define MCMS_COVERAGE_H_

#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace mcms {

// Sorted, duplicate-free list of user ids.
using UserSet = std::vector<int>;

struct CoverageInstance {
  int num_users = 0;      // M
  int num_cells = 0;      // C
  int prbs_per_cell = 0;  // N
  // collections[c][j] = users served when cell c streams on PRB j.
  std::vector<std::vector<UserSet>> collections;
  // primary_cell[k] = cell containing user k.
  std::vector<int> primary_cell;

  bool operator==(const CoverageInstance&) const = default;
};

struct Allocation {
  // chosen[c] = PRB index used by cell c.
  std::vector<int> chosen;

  bool operator==(const Allocation&) const = default;
};

enum class ServiceMode { kMultiConnectivity, kSingleConnectivity };

struct ServedReport {
  UserSet served_mc;
  UserSet served_sc;
  int unserved_mc = 0;
  int unserved_sc = 0;
};

// Returns OK iff the instance is well formed; otherwise InvalidArgument
// describing the first violation found.
absl::Status ValidateInstance(const CoverageInstance& instance);

absl::Status ValidateAllocation(const CoverageInstance& instance,
                                const Allocation& alloc);

// Union of the chosen set of every cell. The instance must be valid.
absl::StatusOr<UserSet> ServedMc(const CoverageInstance& instance,
                                 const Allocation& alloc);

// Users contained in the set chosen by their own primary cell.
absl::StatusOr<UserSet> ServedSc(const CoverageInstance& instance,
                                 const Allocation& alloc);

// Number of served users under `mode`.
absl::StatusOr<int> Objective(const CoverageInstance& instance,
                              const Allocation& alloc, ServiceMode mode);

absl::StatusOr<ServedReport> Evaluate(const CoverageInstance& instance,
                                      const Allocation& alloc);

}  // namespace mcms

#endif  // MCMS_COVERAGE_H_
