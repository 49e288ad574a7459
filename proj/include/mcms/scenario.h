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

// Multi-cell wireless scenario model.
//
// Cells are pointy-top hexagons with circumradius `cell_radius`; base stations
// sit at hexagon centers, so neighboring sites are sqrt(3) * radius apart.
// Links are noise limited: per (cell, PRB, user, sub-frame) the SNR is the
// distance-based mean SNR times an independent unit-mean exponential
// (Rayleigh power) fading gain, and the decodable rate is the Shannon rate
// over one PRB.

#ifndef MCMS_SCENARIO_H_
#define MCMS_SCENARIO_H_

#include <cstdint>
#include <random>
#include <vector>

#include "absl/status/statusor.h"
#include "mcms/coverage.h"

namespace mcms {

struct Point {
  double x = 0.0;
  double y = 0.0;

  bool operator==(const Point&) const = default;
};

double Distance(const Point& a, const Point& b);

struct ScenarioUser {
  int id = 0;
  Point position;
  int primary_cell = 0;

  bool operator==(const ScenarioUser&) const = default;
};

struct Scenario {
  int num_cells = 0;
  double cell_radius = 0.0;  // meters, center to vertex
  int users_per_cell = 0;
  std::vector<Point> base_stations;
  std::vector<ScenarioUser> users;

  int num_users() const { return static_cast<int>(users.size()); }

  bool operator==(const Scenario&) const = default;
};

enum class Fading {
  kRayleigh,  // i.i.d. unit-mean exponential power gain
  kNone,      // gain fixed at 1
};

struct ChannelParams {
  double tx_power_dbm = 30.0;  // per PRB
  double noise_figure_db = 9.0;
  double noise_psd_dbm_hz = -174.0;
  double prb_bandwidth_hz = 180e3;
  double pathloss_ref_db = 128.1;    // loss at 1 km
  double pathloss_slope_db = 37.6;   // per decade of distance
  double min_distance_m = 10.0;
  Fading fading = Fading::kRayleigh;
};

absl::Status ValidateChannelParams(const ChannelParams& params);

struct StreamSpec {
  double rate_bps = 0.0;  // R
};

// Decodable rates r[c][j][k] for one sub-frame, in bits/s.
struct RateRealization {
  int subframe = 0;
  int num_cells = 0;
  int num_prbs = 0;
  int num_users = 0;
  std::vector<double> rates;  // row-major [cell][prb][user]

  double at(int cell, int prb, int user) const {
    return rates[(static_cast<size_t>(cell) * num_prbs + prb) * num_users +
                 user];
  }
  double& at(int cell, int prb, int user) {
    return rates[(static_cast<size_t>(cell) * num_prbs + prb) * num_users +
                 user];
  }
};

// Base-station centers for 1, 7 or 19 cells (center plus full hex rings),
// center cell first at the origin.
absl::StatusOr<std::vector<Point>> HexLayout(int num_cells, double radius);

// True iff `p` lies inside the pointy-top hexagon of circumradius `radius`
// centered at `center`.
bool InsideHexagon(const Point& p, const Point& center, double radius);

// Places exactly `users_per_cell` users uniformly inside each hexagon. User
// ids are assigned cell by cell.
absl::StatusOr<Scenario> GenerateScenario(int num_cells, double radius,
                                          int users_per_cell,
                                          std::mt19937_64& rng);
absl::StatusOr<Scenario> GenerateScenario(int num_cells, double radius,
                                          int users_per_cell, uint64_t seed);

// PL(d) = ref + slope * log10(max(d, min_distance) / 1 km), in dB.
double PathlossDb(double distance_m, const ChannelParams& params);

// Thermal noise plus noise figure over one PRB, in dBm.
double NoisePowerDbm(const ChannelParams& params);

// Average (unfaded) linear SNR at `distance_m`.
double MeanSnr(double distance_m, const ChannelParams& params);

// bandwidth * log2(1 + mean_snr * fading_gain).
double DecodableRate(double mean_snr, double fading_gain,
                     const ChannelParams& params);

// Per (cell, user) mean SNR of a scenario. Fixed for the lifetime of a user
// placement, so it is computed once and reused for every sub-frame.
class LinkBudget {
 public:
  LinkBudget(const Scenario& scenario, const ChannelParams& params);

  int num_cells() const { return num_cells_; }
  int num_users() const { return num_users_; }
  const ChannelParams& params() const { return params_; }
  double mean_snr(int cell, int user) const {
    return mean_snr_[static_cast<size_t>(cell) * num_users_ + user];
  }

 private:
  int num_cells_;
  int num_users_;
  ChannelParams params_;
  std::vector<double> mean_snr_;
};

RateRealization SampleRates(const LinkBudget& budget, int num_prbs,
                            int subframe, std::mt19937_64& rng);
RateRealization SampleRates(const Scenario& scenario,
                            const ChannelParams& params, int num_prbs,
                            int subframe, std::mt19937_64& rng);

// U_jc = { k : r[c][j][k] >= R }. Primary cells come from the scenario.
CoverageInstance DeriveInstance(const Scenario& scenario,
                                const RateRealization& realization,
                                const StreamSpec& stream);

}  // namespace mcms

#endif  // MCMS_SCENARIO_H_
