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

// JSON documents exchanged with the outside world.
//
// Instance:
//   {"M": 4, "C": 2, "N": 2,
//    "collections": [[[0, 1], [1, 2]], [[2, 3], [0, 3]]],
//    "primary": [0, 0, 1, 1]}
// collections[c][j] lists the users served by cell c on PRB j. Ids are
// 0-based. Sets are sorted and deduplicated on load.
//
// Scenario dump:
//   {"cells": 7, "radius": 300, "users_per_cell": 2,
//    "base_stations": [[x, y], ...],
//    "users": [{"id": 0, "x": ..., "y": ..., "primary": 0}, ...]}
//
// Config file: an object whose keys are the CLI long flag names without the
// leading dashes ("seed", "trials", "users-per-cell", ...).

#ifndef MCMS_IO_H_
#define MCMS_IO_H_

#include <string>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "json.hpp"
#include "mcms/coverage.h"
#include "mcms/harness.h"
#include "mcms/scenario.h"

namespace mcms {

nlohmann::json InstanceToJson(const CoverageInstance& instance);

// Parses and validates an instance document.
absl::StatusOr<CoverageInstance> InstanceFromJson(const nlohmann::json& doc);

absl::StatusOr<CoverageInstance> ReadInstanceFile(const std::string& path);
absl::Status WriteInstanceFile(const CoverageInstance& instance,
                               const std::string& path);

nlohmann::json ScenarioToJson(const Scenario& scenario);
absl::StatusOr<Scenario> ScenarioFromJson(const nlohmann::json& doc);

// Overwrites the fields of `config` named in `doc`. Unknown keys are errors.
absl::Status ApplyConfigJson(const nlohmann::json& doc,
                             ExperimentConfig* config);
absl::Status ApplyConfigFile(const std::string& path,
                             ExperimentConfig* config);

// Run parameters plus per-point statistics that do not fit the CSV schema
// (standard deviations, sample counts, the averaging method).
nlohmann::json SweepMetadataJson(const ExperimentConfig& config,
                                 const SweepResult& result);

}  // namespace mcms

#endif  // MCMS_IO_H_
