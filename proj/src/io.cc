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

#include "mcms/io.h"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace mcms {
namespace {

using nlohmann::json;

absl::StatusOr<json> ParseFile(const std::string& path) {
  std::ifstream file(path);
  if (!file) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::stringstream buffer;
  buffer << file.rdbuf();
  json doc = json::parse(buffer.str(), nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) {
    return absl::InvalidArgumentError(absl::StrCat(path, ": malformed JSON"));
  }
  return doc;
}

absl::Status WriteText(const std::string& text, const std::string& path) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) return absl::UnavailableError(absl::StrCat("cannot open ", path));
  file << text;
  if (!file.flush()) {
    return absl::DataLossError(absl::StrCat("failed writing ", path));
  }
  return absl::OkStatus();
}

const char* AxisName(SweepAxis axis) {
  return axis == SweepAxis::kUsersPerCell ? "users" : "radius";
}

}  // namespace

json InstanceToJson(const CoverageInstance& instance) {
  return json{{"M", instance.num_users},
              {"C", instance.num_cells},
              {"N", instance.prbs_per_cell},
              {"collections", instance.collections},
              {"primary", instance.primary_cell}};
}

absl::StatusOr<CoverageInstance> InstanceFromJson(const json& doc) {
  CoverageInstance instance;
  try {
    if (!doc.is_object()) {
      return absl::InvalidArgumentError("instance must be a JSON object");
    }
    for (const char* key : {"M", "C", "N", "collections", "primary"}) {
      if (!doc.contains(key)) {
        return absl::InvalidArgumentError(
            absl::StrCat("instance is missing field \"", key, "\""));
      }
    }
    instance.num_users = doc.at("M").get<int>();
    instance.num_cells = doc.at("C").get<int>();
    instance.prbs_per_cell = doc.at("N").get<int>();
    instance.collections =
        doc.at("collections").get<std::vector<std::vector<UserSet>>>();
    instance.primary_cell = doc.at("primary").get<std::vector<int>>();
  } catch (const json::exception& e) {
    return absl::InvalidArgumentError(
        absl::StrCat("bad instance document: ", e.what()));
  }
  for (auto& cell : instance.collections) {
    for (UserSet& users : cell) {
      std::sort(users.begin(), users.end());
      users.erase(std::unique(users.begin(), users.end()), users.end());
    }
  }
  if (absl::Status s = ValidateInstance(instance); !s.ok()) return s;
  return instance;
}

absl::StatusOr<CoverageInstance> ReadInstanceFile(const std::string& path) {
  absl::StatusOr<json> doc = ParseFile(path);
  if (!doc.ok()) return doc.status();
  return InstanceFromJson(*doc);
}

absl::Status WriteInstanceFile(const CoverageInstance& instance,
                               const std::string& path) {
  return WriteText(InstanceToJson(instance).dump() + "\n", path);
}

json ScenarioToJson(const Scenario& scenario) {
  json sites = json::array();
  for (const Point& p : scenario.base_stations) sites.push_back({p.x, p.y});
  json users = json::array();
  for (const ScenarioUser& u : scenario.users) {
    users.push_back({{"id", u.id},
                     {"x", u.position.x},
                     {"y", u.position.y},
                     {"primary", u.primary_cell}});
  }
  return json{{"cells", scenario.num_cells},
              {"radius", scenario.cell_radius},
              {"users_per_cell", scenario.users_per_cell},
              {"base_stations", sites},
              {"users", users}};
}

absl::StatusOr<Scenario> ScenarioFromJson(const json& doc) {
  Scenario scenario;
  try {
    scenario.num_cells = doc.at("cells").get<int>();
    scenario.cell_radius = doc.at("radius").get<double>();
    scenario.users_per_cell = doc.at("users_per_cell").get<int>();
    for (const json& p : doc.at("base_stations")) {
      scenario.base_stations.push_back(
          {p.at(0).get<double>(), p.at(1).get<double>()});
    }
    for (const json& u : doc.at("users")) {
      scenario.users.push_back(
          {u.at("id").get<int>(),
           {u.at("x").get<double>(), u.at("y").get<double>()},
           u.at("primary").get<int>()});
    }
  } catch (const json::exception& e) {
    return absl::InvalidArgumentError(
        absl::StrCat("bad scenario document: ", e.what()));
  }
  if (static_cast<int>(scenario.base_stations.size()) != scenario.num_cells) {
    return absl::InvalidArgumentError("base station count does not match");
  }
  for (size_t k = 0; k < scenario.users.size(); ++k) {
    const ScenarioUser& u = scenario.users[k];
    if (u.id != static_cast<int>(k) || u.primary_cell < 0 ||
        u.primary_cell >= scenario.num_cells) {
      return absl::InvalidArgumentError(
          absl::StrCat("bad user record at index ", k));
    }
  }
  return scenario;
}

absl::Status ApplyConfigJson(const json& doc, ExperimentConfig* config) {
  if (!doc.is_object()) {
    return absl::InvalidArgumentError("config must be a JSON object");
  }
  try {
    for (const auto& [key, value] : doc.items()) {
      if (key == "seed") {
        config->seed = value.get<uint64_t>();
      } else if (key == "trials") {
        config->trials = value.get<int>();
      } else if (key == "subframes") {
        config->subframes = value.get<int>();
      } else if (key == "prbs") {
        config->prbs = value.get<int>();
      } else if (key == "rate") {
        config->stream_rate_bps = value.get<double>();
      } else if (key == "cells") {
        config->cells = value.get<int>();
      } else if (key == "radius") {
        config->radius = value.get<double>();
      } else if (key == "users-per-cell") {
        config->users_per_cell = value.get<int>();
      } else if (key == "values") {
        config->sweep_values = value.get<std::vector<double>>();
      } else if (key == "exact") {
        config->run_exact = value.get<bool>();
      } else if (key == "deterministic-fading") {
        config->channel.fading =
            value.get<bool>() ? Fading::kNone : Fading::kRayleigh;
      } else if (key == "workers") {
        config->workers = value.get<int>();
      } else if (key == "tx-power") {
        config->channel.tx_power_dbm = value.get<double>();
      } else if (key == "noise-figure") {
        config->channel.noise_figure_db = value.get<double>();
      } else if (key == "noise-psd") {
        config->channel.noise_psd_dbm_hz = value.get<double>();
      } else if (key == "prb-bandwidth") {
        config->channel.prb_bandwidth_hz = value.get<double>();
      } else if (key == "pathloss-ref") {
        config->channel.pathloss_ref_db = value.get<double>();
      } else if (key == "pathloss-slope") {
        config->channel.pathloss_slope_db = value.get<double>();
      } else if (key == "min-distance") {
        config->channel.min_distance_m = value.get<double>();
      } else {
        return absl::InvalidArgumentError(
            absl::StrCat("unknown config key \"", key, "\""));
      }
    }
  } catch (const json::exception& e) {
    return absl::InvalidArgumentError(absl::StrCat("bad config: ", e.what()));
  }
  return absl::OkStatus();
}

absl::Status ApplyConfigFile(const std::string& path,
                             ExperimentConfig* config) {
  absl::StatusOr<json> doc = ParseFile(path);
  if (!doc.ok()) return doc.status();
  return ApplyConfigJson(*doc, config);
}

json SweepMetadataJson(const ExperimentConfig& config,
                       const SweepResult& result) {
  json points = json::array();
  for (const SweepPoint& p : result.points) {
    json row = {{"x", p.x},
                {"num_users", p.num_users},
                {"mean_unserved_sc", p.mean_unserved_sc},
                {"mean_unserved_mc", p.mean_unserved_mc},
                {"stddev_unserved_sc", p.stddev_unserved_sc},
                {"stddev_unserved_mc", p.stddev_unserved_mc},
                {"trials", p.trials},
                {"samples", p.samples}};
    if (p.mean_unserved_exact.has_value()) {
      row["mean_unserved_exact"] = *p.mean_unserved_exact;
    }
    points.push_back(row);
  }
  const ChannelParams& ch = config.channel;
  return json{
      {"axis", AxisName(result.axis)},
      {"averaging",
       "arithmetic mean over trials x subframes; user placement regenerated "
       "per trial, fading resampled per sub-frame"},
      {"mc_allocator", "greedy"},
      {"sc_allocator", "per-cell best PRB for own primary users"},
      {"seed", config.seed},
      {"trials", config.trials},
      {"subframes", config.subframes},
      {"cells", config.cells},
      {"prbs", config.prbs},
      {"rate", config.stream_rate_bps},
      {"radius", config.radius},
      {"users-per-cell", config.users_per_cell},
      {"channel",
       {{"tx-power", ch.tx_power_dbm},
        {"noise-figure", ch.noise_figure_db},
        {"noise-psd", ch.noise_psd_dbm_hz},
        {"prb-bandwidth", ch.prb_bandwidth_hz},
        {"pathloss-ref", ch.pathloss_ref_db},
        {"pathloss-slope", ch.pathloss_slope_db},
        {"min-distance", ch.min_distance_m},
        {"fading", ch.fading == Fading::kRayleigh ? "rayleigh" : "none"}}},
      {"points", points}};
}

}  // namespace mcms
