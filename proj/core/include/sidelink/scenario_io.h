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

#ifndef SIDELINK_SCENARIO_IO_H_
#define SIDELINK_SCENARIO_IO_H_

#include <filesystem>
#include <string>

#include "sidelink/scenario.h"

namespace sidelink {

// JSON text for a config. Keys mirror the ScenarioConfig fields:
//
//   {"bandwidth_mhz": 1.26, "message_rate_hz": 10, "n_clusters": 1,
//    "n_subframes": 10, "resources_per_subframe": 3, "seed": 1,
//    "sinr_model": {"kind": "gaussian_db", "mean_db": 18, "std_db": 4},
//    "vehicles_per_cluster": 10}
std::string ConfigToJson(const ScenarioConfig& config);

// Parses and validates a config. Missing keys keep their defaults; unknown
// keys, wrong types and invalid values throw InvalidConfigError.
ScenarioConfig ConfigFromJson(const std::string& text);
ScenarioConfig LoadConfig(const std::filesystem::path& path);

// {"config": {...}, "clusters": [{"n_real_vehicles": m, "dummy_mask": [...],
// "weights": [[...], ...]}, ...]}. Without weights only the config is
// written and importing regenerates the clusters from its seed.
std::string ScenarioToJson(const Scenario& scenario, bool include_weights);
Scenario ScenarioFromJson(const std::string& text);

}  // namespace sidelink

#endif  // SIDELINK_SCENARIO_IO_H_
