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

#include "sidelink/scenario_io.h"

#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "json.hpp"
#include "sidelink/errors.h"

namespace sidelink {
namespace {

using nlohmann::json;

void RejectUnknownKeys(const json& object, const std::set<std::string>& allowed,
                       const std::string& where) {
  if (!object.is_object()) throw InvalidConfigError(where + " must be a JSON object");
  for (const auto& [key, value] : object.items()) {
    if (!allowed.contains(key)) {
      throw InvalidConfigError("unknown key '" + key + "' in " + where);
    }
  }
}

std::size_t ReadCount(const json& object, const char* key, std::size_t fallback) {
  if (!object.contains(key)) return fallback;
  const json& v = object.at(key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    throw InvalidConfigError(std::string(key) + " must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

double ReadNumber(const json& object, const char* key, double fallback) {
  if (!object.contains(key)) return fallback;
  const json& v = object.at(key);
  if (!v.is_number()) throw InvalidConfigError(std::string(key) + " must be a number");
  return v.get<double>();
}

json ConfigJson(const ScenarioConfig& c) {
  return json{
      {"vehicles_per_cluster", c.vehicles_per_cluster},
      {"n_clusters", c.n_clusters},
      {"n_subframes", c.n_subframes},
      {"resources_per_subframe", c.resources_per_subframe},
      {"bandwidth_mhz", c.bandwidth_mhz},
      {"sinr_model",
       {{"kind", ToString(c.sinr_model.kind)},
        {"mean_db", c.sinr_model.mean_db},
        {"std_db", c.sinr_model.std_db}}},
      {"message_rate_hz", c.message_rate_hz},
      {"seed", c.seed},
  };
}

ScenarioConfig ConfigFromJsonValue(const json& j) {
  RejectUnknownKeys(j,
                    {"vehicles_per_cluster", "n_clusters", "n_subframes",
                     "resources_per_subframe", "bandwidth_mhz", "sinr_model",
                     "message_rate_hz", "seed"},
                    "config");
  ScenarioConfig c;
  c.vehicles_per_cluster = ReadCount(j, "vehicles_per_cluster", c.vehicles_per_cluster);
  c.n_clusters = ReadCount(j, "n_clusters", c.n_clusters);
  c.n_subframes = ReadCount(j, "n_subframes", c.n_subframes);
  c.resources_per_subframe =
      ReadCount(j, "resources_per_subframe", c.resources_per_subframe);
  c.bandwidth_mhz = ReadNumber(j, "bandwidth_mhz", c.bandwidth_mhz);
  c.message_rate_hz = ReadNumber(j, "message_rate_hz", c.message_rate_hz);
  c.seed = ReadCount(j, "seed", c.seed);
  if (j.contains("sinr_model")) {
    const json& m = j.at("sinr_model");
    RejectUnknownKeys(m, {"kind", "mean_db", "std_db"}, "sinr_model");
    if (m.contains("kind")) {
      if (!m.at("kind").is_string()) throw InvalidConfigError("sinr_model.kind must be a string");
      c.sinr_model.kind = ParseSinrDistribution(m.at("kind").get<std::string>());
    }
    c.sinr_model.mean_db = ReadNumber(m, "mean_db", c.sinr_model.mean_db);
    c.sinr_model.std_db = ReadNumber(m, "std_db", c.sinr_model.std_db);
  }
  ValidateConfig(c);
  return c;
}

json ParseJson(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidConfigError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

std::string ConfigToJson(const ScenarioConfig& config) {
  return ConfigJson(config).dump(2) + "\n";
}

ScenarioConfig ConfigFromJson(const std::string& text) {
  return ConfigFromJsonValue(ParseJson(text));
}

ScenarioConfig LoadConfig(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ConfigFromJson(buffer.str());
}

std::string ScenarioToJson(const Scenario& scenario, bool include_weights) {
  json out{{"config", ConfigJson(scenario.config)}};
  if (include_weights) {
    json clusters = json::array();
    for (const ClusterInstance& cluster : scenario.clusters) {
      json rows = json::array();
      for (std::size_t r = 0; r < cluster.weights.rows(); ++r) {
        const auto row = cluster.weights.row(r);
        rows.push_back(std::vector<double>(row.begin(), row.end()));
      }
      clusters.push_back({{"n_real_vehicles", cluster.n_real_vehicles},
                          {"dummy_mask", cluster.dummy_mask},
                          {"weights", std::move(rows)}});
    }
    out["clusters"] = std::move(clusters);
  }
  return out.dump(2) + "\n";
}

Scenario ScenarioFromJson(const std::string& text) {
  const json j = ParseJson(text);
  RejectUnknownKeys(j, {"config", "clusters"}, "scenario");
  if (!j.contains("config")) throw InvalidConfigError("scenario has no config");
  const ScenarioConfig config = ConfigFromJsonValue(j.at("config"));
  if (!j.contains("clusters")) return GenerateScenario(config);

  Scenario scenario{config, {}};
  try {
    for (const json& c : j.at("clusters")) {
      RejectUnknownKeys(c, {"n_real_vehicles", "dummy_mask", "weights"}, "cluster");
      const auto rows = c.at("weights").get<std::vector<std::vector<double>>>();
      ClusterInstance cluster{c.at("n_real_vehicles").get<std::size_t>(),
                              WeightMatrix::FromRows(rows, config.bandwidth_mhz),
                              c.at("dummy_mask").get<std::vector<bool>>()};
      if (cluster.dummy_mask.size() != cluster.weights.rows()) {
        throw InvalidConfigError("dummy_mask length differs from weight rows");
      }
      scenario.clusters.push_back(std::move(cluster));
    }
  } catch (const json::exception& e) {
    throw InvalidConfigError(std::string("malformed scenario: ") + e.what());
  } catch (const DimensionError& e) {
    throw InvalidConfigError(std::string("malformed scenario: ") + e.what());
  } catch (const InvalidWeightError& e) {
    throw InvalidConfigError(std::string("malformed scenario: ") + e.what());
  }
  if (scenario.clusters.size() != config.n_clusters) {
    throw InvalidConfigError("scenario lists " + std::to_string(scenario.clusters.size()) +
                             " clusters, config says " +
                             std::to_string(config.n_clusters));
  }
  return scenario;
}

}  // namespace sidelink
