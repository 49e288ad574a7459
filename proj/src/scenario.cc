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

#include "mcms/scenario.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"

namespace mcms {
namespace {

constexpr double kSqrt3 = 1.7320508075688772;

// Axial hex directions, walked in order to trace a ring.
constexpr std::array<std::pair<int, int>, 6> kHexDirections = {
    {{1, 0}, {1, -1}, {0, -1}, {-1, 0}, {-1, 1}, {0, 1}}};

Point AxialToPoint(int q, int r, double radius) {
  return {kSqrt3 * radius * (q + r / 2.0), 1.5 * radius * r};
}

}  // namespace

double Distance(const Point& a, const Point& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

absl::Status ValidateChannelParams(const ChannelParams& params) {
  if (!(params.prb_bandwidth_hz > 0.0)) {
    return absl::InvalidArgumentError("PRB bandwidth must be positive");
  }
  if (!(params.min_distance_m > 0.0)) {
    return absl::InvalidArgumentError("minimum distance must be positive");
  }
  return absl::OkStatus();
}

absl::StatusOr<std::vector<Point>> HexLayout(int num_cells, double radius) {
  int rings = 0;
  switch (num_cells) {
    case 1:
      rings = 0;
      break;
    case 7:
      rings = 1;
      break;
    case 19:
      rings = 2;
      break;
    default:
      return absl::InvalidArgumentError(absl::StrFormat(
          "unsupported cell count %d (expected 1, 7 or 19)", num_cells));
  }
  if (!(radius > 0.0)) {
    return absl::InvalidArgumentError("cell radius must be positive");
  }
  std::vector<Point> sites = {Point{0.0, 0.0}};
  for (int ring = 1; ring <= rings; ++ring) {
    // Start at direction 4 scaled by the ring index, then walk the 6 sides.
    int q = kHexDirections[4].first * ring;
    int r = kHexDirections[4].second * ring;
    for (const auto& [dq, dr] : kHexDirections) {
      for (int step = 0; step < ring; ++step) {
        sites.push_back(AxialToPoint(q, r, radius));
        q += dq;
        r += dr;
      }
    }
  }
  return sites;
}

bool InsideHexagon(const Point& p, const Point& center, double radius) {
  const double dx = std::abs(p.x - center.x);
  const double dy = std::abs(p.y - center.y);
  return dx <= kSqrt3 / 2.0 * radius && dy <= radius - dx / kSqrt3;
}

absl::StatusOr<Scenario> GenerateScenario(int num_cells, double radius,
                                          int users_per_cell,
                                          std::mt19937_64& rng) {
  if (users_per_cell < 0) {
    return absl::InvalidArgumentError("users per cell must be non-negative");
  }
  absl::StatusOr<std::vector<Point>> sites = HexLayout(num_cells, radius);
  if (!sites.ok()) return sites.status();

  Scenario scenario;
  scenario.num_cells = num_cells;
  scenario.cell_radius = radius;
  scenario.users_per_cell = users_per_cell;
  scenario.base_stations = *std::move(sites);
  scenario.users.reserve(static_cast<size_t>(num_cells) * users_per_cell);

  const double half_width = kSqrt3 / 2.0 * radius;
  std::uniform_real_distribution<double> ux(-half_width, half_width);
  std::uniform_real_distribution<double> uy(-radius, radius);
  for (int c = 0; c < num_cells; ++c) {
    const Point& center = scenario.base_stations[c];
    for (int n = 0; n < users_per_cell; ++n) {
      // Rejection sampling from the bounding box keeps the density uniform.
      Point p;
      do {
        p = {center.x + ux(rng), center.y + uy(rng)};
      } while (!InsideHexagon(p, center, radius));
      scenario.users.push_back(
          {static_cast<int>(scenario.users.size()), p, c});
    }
  }
  return scenario;
}

absl::StatusOr<Scenario> GenerateScenario(int num_cells, double radius,
                                          int users_per_cell, uint64_t seed) {
  std::mt19937_64 rng(seed);
  return GenerateScenario(num_cells, radius, users_per_cell, rng);
}

double PathlossDb(double distance_m, const ChannelParams& params) {
  const double d = std::max(distance_m, params.min_distance_m);
  return params.pathloss_ref_db +
         params.pathloss_slope_db * std::log10(d / 1000.0);
}

double NoisePowerDbm(const ChannelParams& params) {
  return params.noise_psd_dbm_hz + 10.0 * std::log10(params.prb_bandwidth_hz) +
         params.noise_figure_db;
}

double MeanSnr(double distance_m, const ChannelParams& params) {
  const double snr_db = params.tx_power_dbm - PathlossDb(distance_m, params) -
                        NoisePowerDbm(params);
  return std::pow(10.0, snr_db / 10.0);
}

double DecodableRate(double mean_snr, double fading_gain,
                     const ChannelParams& params) {
  return params.prb_bandwidth_hz * std::log2(1.0 + mean_snr * fading_gain);
}

LinkBudget::LinkBudget(const Scenario& scenario, const ChannelParams& params)
    : num_cells_(scenario.num_cells),
      num_users_(scenario.num_users()),
      params_(params),
      mean_snr_(static_cast<size_t>(num_cells_) * num_users_) {
  for (int c = 0; c < num_cells_; ++c) {
    for (int k = 0; k < num_users_; ++k) {
      mean_snr_[static_cast<size_t>(c) * num_users_ + k] = MeanSnr(
          Distance(scenario.base_stations[c], scenario.users[k].position),
          params);
    }
  }
}

RateRealization SampleRates(const LinkBudget& budget, int num_prbs,
                            int subframe, std::mt19937_64& rng) {
  RateRealization out;
  out.subframe = subframe;
  out.num_cells = budget.num_cells();
  out.num_prbs = num_prbs;
  out.num_users = budget.num_users();
  out.rates.resize(static_cast<size_t>(out.num_cells) * num_prbs *
                   out.num_users);
  const ChannelParams& params = budget.params();
  std::exponential_distribution<double> fading(1.0);
  for (int c = 0; c < out.num_cells; ++c) {
    for (int j = 0; j < num_prbs; ++j) {
      for (int k = 0; k < out.num_users; ++k) {
        const double g =
            params.fading == Fading::kRayleigh ? fading(rng) : 1.0;
        out.at(c, j, k) = DecodableRate(budget.mean_snr(c, k), g, params);
      }
    }
  }
  return out;
}

RateRealization SampleRates(const Scenario& scenario,
                            const ChannelParams& params, int num_prbs,
                            int subframe, std::mt19937_64& rng) {
  return SampleRates(LinkBudget(scenario, params), num_prbs, subframe, rng);
}

CoverageInstance DeriveInstance(const Scenario& scenario,
                                const RateRealization& realization,
                                const StreamSpec& stream) {
  CoverageInstance instance;
  instance.num_users = realization.num_users;
  instance.num_cells = realization.num_cells;
  instance.prbs_per_cell = realization.num_prbs;
  instance.collections.assign(realization.num_cells,
                              std::vector<UserSet>(realization.num_prbs));
  for (int c = 0; c < realization.num_cells; ++c) {
    for (int j = 0; j < realization.num_prbs; ++j) {
      UserSet& users = instance.collections[c][j];
      for (int k = 0; k < realization.num_users; ++k) {
        if (realization.at(c, j, k) >= stream.rate_bps) users.push_back(k);
      }
    }
  }
  instance.primary_cell.reserve(scenario.users.size());
  for (const ScenarioUser& user : scenario.users) {
    instance.primary_cell.push_back(user.primary_cell);
  }
  return instance;
}

}  // namespace mcms
