// Copyright 2026 The Sidelink Authors
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

#ifndef SIDELINK_SCENARIO_H_
#define SIDELINK_SCENARIO_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sidelink/partition.h"
#include "sidelink/weight_matrix.h"

namespace sidelink {

enum class SinrDistribution {
  kGaussianDb,  // i.i.d. normal in dB, i.e. log-normal in linear scale
  kUniformDb,   // uniform in dB with the same mean and standard deviation
};

std::string ToString(SinrDistribution kind);
// Throws InvalidConfigError for an unknown name.
SinrDistribution ParseSinrDistribution(const std::string& name);

struct SinrModel {
  SinrDistribution kind = SinrDistribution::kGaussianDb;
  double mean_db = 18.0;
  double std_db = 4.0;

  bool operator==(const SinrModel&) const = default;
};

// Simulation parameters. Defaults follow the one-shot setup of 10 vehicles,
// 10 subframes and K = 3; the full-scale setup is 100 subframes, K = 7.
struct ScenarioConfig {
  std::size_t vehicles_per_cluster = 10;
  std::size_t n_clusters = 1;
  std::size_t n_subframes = 10;
  std::size_t resources_per_subframe = 3;
  double bandwidth_mhz = 1.26;
  SinrModel sinr_model;
  double message_rate_hz = 10.0;
  std::uint64_t seed = 1;

  MacroPartition partition() const {
    return MacroPartition(n_subframes, resources_per_subframe);
  }

  bool operator==(const ScenarioConfig&) const = default;
};

// Throws InvalidConfigError naming the first violated constraint: zero
// counts, non-positive bandwidth or message rate, negative SINR spread, or
// more vehicles than subframes.
void ValidateConfig(const ScenarioConfig& config);

struct ClusterInstance {
  std::size_t n_real_vehicles = 0;
  WeightMatrix weights;         // n_subframes x K*n_subframes, padded
  std::vector<bool> dummy_mask;  // true for padding rows

  bool operator==(const ClusterInstance&) const = default;
};

struct Scenario {
  ScenarioConfig config;
  std::vector<ClusterInstance> clusters;

  bool operator==(const Scenario&) const = default;
};

// B * log2(1 + sinr) in Mbit/s for B in MHz. Throws InvalidParameterError
// for negative or non-finite SINR and non-positive bandwidth.
double ComputeWeight(double sinr_linear, double bandwidth_mhz);

double DbToLinear(double db);

struct PaddedWeights {
  WeightMatrix weights;
  std::vector<bool> dummy_mask;
};

// Appends all-zero dummy rows until there are target_rows rows. real_rows
// holds m rows of n_cols entries each, row-major; m may be zero. Throws
// OverloadError when m > target_rows.
PaddedWeights PadCluster(std::span<const double> real_rows, std::size_t n_cols,
                         std::size_t target_rows,
                         double bandwidth_mhz = WeightMatrix::kDefaultBandwidthMhz);
PaddedWeights PadCluster(const WeightMatrix& weights, std::size_t target_rows);

// Independent clusters, each drawn from its own substream of config.seed.
// Deterministic: the same config always yields bit-identical weights.
Scenario GenerateScenario(const ScenarioConfig& config);

// One cluster of a scenario, generated without the others.
ClusterInstance GenerateCluster(const ScenarioConfig& config,
                                std::size_t cluster_index);

}  // namespace sidelink

#endif  // SIDELINK_SCENARIO_H_
