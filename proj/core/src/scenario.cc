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

#include "sidelink/scenario.h"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "sidelink/errors.h"
#include "sidelink/random.h"

namespace sidelink {

std::string ToString(SinrDistribution kind) {
  switch (kind) {
    case SinrDistribution::kGaussianDb:
      return "gaussian_db";
    case SinrDistribution::kUniformDb:
      return "uniform_db";
  }
  return "unknown";
}

SinrDistribution ParseSinrDistribution(const std::string& name) {
  if (name == "gaussian_db") return SinrDistribution::kGaussianDb;
  if (name == "uniform_db") return SinrDistribution::kUniformDb;
  throw InvalidConfigError("unknown SINR distribution '" + name +
                           "' (expected gaussian_db or uniform_db)");
}

void ValidateConfig(const ScenarioConfig& c) {
  auto fail = [](const std::string& what) { throw InvalidConfigError(what); };
  if (c.vehicles_per_cluster == 0) fail("vehicles_per_cluster must be >= 1");
  if (c.n_clusters == 0) fail("n_clusters must be >= 1");
  if (c.n_subframes == 0) fail("n_subframes must be >= 1");
  if (c.resources_per_subframe == 0) fail("resources_per_subframe must be >= 1");
  if (!(c.bandwidth_mhz > 0.0) || !std::isfinite(c.bandwidth_mhz))
    fail("bandwidth_mhz must be finite and > 0");
  if (!(c.message_rate_hz > 0.0) || !std::isfinite(c.message_rate_hz))
    fail("message_rate_hz must be finite and > 0");
  if (!std::isfinite(c.sinr_model.mean_db)) fail("sinr_model.mean_db must be finite");
  if (!(c.sinr_model.std_db >= 0.0) || !std::isfinite(c.sinr_model.std_db))
    fail("sinr_model.std_db must be finite and >= 0");
  if (c.n_subframes < c.vehicles_per_cluster) {
    fail("n_subframes (" + std::to_string(c.n_subframes) +
         ") must be >= vehicles_per_cluster (" +
         std::to_string(c.vehicles_per_cluster) + "): overloaded cluster");
  }
}

double ComputeWeight(double sinr_linear, double bandwidth_mhz) {
  if (!(sinr_linear >= 0.0) || !std::isfinite(sinr_linear)) {
    throw InvalidParameterError("SINR must be finite and >= 0, got " +
                                std::to_string(sinr_linear));
  }
  if (!(bandwidth_mhz > 0.0) || !std::isfinite(bandwidth_mhz)) {
    throw InvalidParameterError("bandwidth must be finite and > 0");
  }
  // log1p keeps low SINR values strictly positive.
  return bandwidth_mhz * std::log1p(sinr_linear) / std::numbers::ln2;
}

double DbToLinear(double db) { return std::pow(10.0, db / 10.0); }

PaddedWeights PadCluster(std::span<const double> real_rows, std::size_t n_cols,
                         std::size_t target_rows, double bandwidth_mhz) {
  if (n_cols == 0 || real_rows.size() % n_cols != 0) {
    throw DimensionError("padding input is not a whole number of rows");
  }
  const std::size_t m = real_rows.size() / n_cols;
  if (m > target_rows) {
    throw OverloadError(std::to_string(m) + " vehicles exceed " +
                        std::to_string(target_rows) +
                        " subframes; some vehicle would go unserved");
  }
  std::vector<double> flat(target_rows * n_cols, 0.0);
  std::copy(real_rows.begin(), real_rows.end(), flat.begin());
  std::vector<bool> mask(target_rows, false);
  for (std::size_t r = m; r < target_rows; ++r) mask[r] = true;
  return {WeightMatrix(target_rows, n_cols, std::move(flat), bandwidth_mhz),
          std::move(mask)};
}

PaddedWeights PadCluster(const WeightMatrix& weights, std::size_t target_rows) {
  return PadCluster(weights.data(), weights.cols(), target_rows,
                    weights.bandwidth_mhz());
}

ClusterInstance GenerateCluster(const ScenarioConfig& config,
                                std::size_t cluster_index) {
  ValidateConfig(config);
  const std::size_t n_cols = config.n_subframes * config.resources_per_subframe;
  const SinrModel& model = config.sinr_model;
  Rng rng(DeriveSeed(DeriveSeed(config.seed, cluster_index), 0));

  // Uniform on [mean - sqrt(3) std, mean + sqrt(3) std] has the given std.
  const double half_width = std::sqrt(3.0) * model.std_db;
  std::vector<double> rates(config.vehicles_per_cluster * n_cols);
  for (double& rate : rates) {
    const double db = model.kind == SinrDistribution::kGaussianDb
                          ? rng.normal(model.mean_db, model.std_db)
                          : model.mean_db + half_width * (2.0 * rng.uniform01() - 1.0);
    rate = ComputeWeight(DbToLinear(db), config.bandwidth_mhz);
  }
  PaddedWeights padded =
      PadCluster(rates, n_cols, config.n_subframes, config.bandwidth_mhz);
  return {config.vehicles_per_cluster, std::move(padded.weights),
          std::move(padded.dummy_mask)};
}

Scenario GenerateScenario(const ScenarioConfig& config) {
  ValidateConfig(config);
  Scenario scenario{config, {}};
  scenario.clusters.reserve(config.n_clusters);
  for (std::size_t c = 0; c < config.n_clusters; ++c) {
    scenario.clusters.push_back(GenerateCluster(config, c));
  }
  return scenario;
}

}  // namespace sidelink
