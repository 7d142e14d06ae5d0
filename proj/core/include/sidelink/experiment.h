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

#ifndef SIDELINK_EXPERIMENT_H_
#define SIDELINK_EXPERIMENT_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sidelink/assignment.h"
#include "sidelink/metrics.h"
#include "sidelink/scenario.h"

namespace sidelink {

enum class Algorithm { kGraph, kExhaustive, kGreedy, kRandom };

std::string ToString(Algorithm algorithm);
// Accepts "graph", "exhaustive", "greedy", "random". Throws
// InvalidParameterError otherwise.
Algorithm ParseAlgorithm(const std::string& name);
// Comma-separated list; duplicates are dropped, result is in enum order.
std::vector<Algorithm> ParseAlgorithmList(const std::string& list);
std::vector<Algorithm> AllAlgorithms();

// Runs one algorithm on one padded cluster. `random_seed` is only used by
// kRandom. kExhaustive enumerates the first n_real_vehicles rows only and
// then gives the dummy rows the unused subframes in ascending order, so
// every algorithm returns a full N-row assignment.
ResourceAssignment RunAlgorithm(Algorithm algorithm, const WeightMatrix& weights,
                                const MacroPartition& partition,
                                std::size_t n_real_vehicles,
                                std::uint64_t random_seed);

struct VehicleRate {
  std::size_t trial = 0;
  std::size_t cluster = 0;
  Algorithm algorithm = Algorithm::kGraph;
  std::size_t vehicle = 0;
  double rate = 0.0;

  bool operator==(const VehicleRate&) const = default;
};

// Metrics over the real vehicles of every cluster of one trial (pooled).
struct TrialMetrics {
  std::size_t trial = 0;
  Algorithm algorithm = Algorithm::kGraph;
  Metrics metrics;

  bool operator==(const TrialMetrics&) const = default;
};

struct AlgorithmSummary {
  Algorithm algorithm = Algorithm::kGraph;
  Metrics mean_metrics;     // each field averaged over trials
  std::vector<double> cdf;  // over all recorded rates, on the report grid

  bool operator==(const AlgorithmSummary&) const = default;
};

struct SolveTiming {
  std::size_t trial = 0;
  std::size_t cluster = 0;
  Algorithm algorithm = Algorithm::kGraph;
  double seconds = 0.0;

  bool operator==(const SolveTiming&) const = default;
};

struct ExperimentReport {
  ScenarioConfig config;
  std::size_t n_trials = 0;
  std::vector<Algorithm> algorithms;
  // Sorted by (trial, cluster, algorithm, vehicle).
  std::vector<VehicleRate> rates;
  // Sorted by (trial, algorithm).
  std::vector<TrialMetrics> trial_metrics;
  std::vector<AlgorithmSummary> summaries;
  std::vector<double> cdf_grid;
  std::vector<SolveTiming> timings;

  // Sum of rates per (trial, cluster) for one algorithm, in trial-major
  // order.
  std::vector<double> ClusterValues(Algorithm algorithm) const;
  std::vector<double> RatesOf(Algorithm algorithm) const;
  const AlgorithmSummary* SummaryOf(Algorithm algorithm) const;
  // Median seconds per solve; nullopt when nothing was timed.
  std::optional<double> MedianSolveSeconds(Algorithm algorithm) const;

  bool operator==(const ExperimentReport&) const = default;
};

struct ExperimentOptions {
  // Used when cdf_grid is empty: evenly spaced points on [0, max rate].
  std::size_t cdf_points = 30;
  std::vector<double> cdf_grid;
  std::size_t threads = 1;
  bool record_timings = true;
};

// Seed of trial t: DeriveSeed(config.seed, t). Every assignment is checked
// with VerifyAssignmentFeasibility before its rates are recorded; an
// infeasible one raises InternalInvariantError. Exhaustive search requires
// vehicles_per_cluster <= 8 (SizeLimitError).
ExperimentReport RunExperiment(const ScenarioConfig& config,
                               const std::vector<Algorithm>& algorithms,
                               std::size_t n_trials,
                               const ExperimentOptions& options = {});

}  // namespace sidelink

#endif  // SIDELINK_EXPERIMENT_H_
