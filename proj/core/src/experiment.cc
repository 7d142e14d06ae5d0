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

#include "sidelink/experiment.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <sstream>
#include <string>
#include <thread>
#include <utility>

#include "sidelink/baselines.h"
#include "sidelink/constraint_matrix.h"
#include "sidelink/errors.h"
#include "sidelink/random.h"
#include "sidelink/reduction.h"

namespace sidelink {
namespace {

struct TrialOutput {
  std::vector<VehicleRate> rates;
  std::vector<SolveTiming> timings;
  double max_weight = 0.0;
};

// Dummy rows take the unused subframes in ascending order; they weigh zero
// so the value is unchanged.
ResourceAssignment CompleteWithDummies(const WeightMatrix& weights,
                                       const MacroPartition& partition,
                                       const ResourceAssignment& real) {
  std::vector<char> used(partition.subframes(), 0);
  for (std::size_t s : real.subframe_of) used[s] = 1;
  std::vector<std::size_t> resources = real.vehicle_to_resource;
  std::size_t next = 0;
  while (resources.size() < weights.rows()) {
    while (used[next]) ++next;
    used[next] = 1;
    resources.push_back(partition.block_begin(next));
  }
  return MakeAssignment(weights, partition, std::move(resources));
}

TrialOutput RunTrial(const ScenarioConfig& base, const std::vector<Algorithm>& algorithms,
                     std::size_t trial, bool record_timings) {
  ScenarioConfig config = base;
  config.seed = DeriveSeed(base.seed, trial);
  const MacroPartition partition = config.partition();
  TrialOutput out;
  for (std::size_t c = 0; c < config.n_clusters; ++c) {
    const ClusterInstance cluster = GenerateCluster(config, c);
    for (std::size_t r = 0; r < cluster.n_real_vehicles; ++r) {
      const auto row = cluster.weights.row(r);
      out.max_weight = std::max(out.max_weight, *std::max_element(row.begin(), row.end()));
    }
    const std::uint64_t random_seed = DeriveSeed(DeriveSeed(config.seed, c), 1);
    for (Algorithm algorithm : algorithms) {
      const auto start = std::chrono::steady_clock::now();
      const ResourceAssignment assignment = RunAlgorithm(
          algorithm, cluster.weights, partition, cluster.n_real_vehicles, random_seed);
      const auto stop = std::chrono::steady_clock::now();
      const FeasibilityReport check = VerifyAssignmentFeasibility(
          assignment, partition.subframes(), partition.per_subframe());
      if (!check.feasible) {
        std::ostringstream msg;
        msg << ToString(algorithm) << " produced an infeasible assignment (trial "
            << trial << ", cluster " << c << "):";
        for (const auto& v : check.violations) msg << ' ' << v << ';';
        throw InternalInvariantError(msg.str());
      }
      for (std::size_t v = 0; v < cluster.n_real_vehicles; ++v) {
        out.rates.push_back({trial, c, algorithm, v,
                             cluster.weights(v, assignment.vehicle_to_resource[v])});
      }
      if (record_timings) {
        out.timings.push_back(
            {trial, c, algorithm, std::chrono::duration<double>(stop - start).count()});
      }
    }
  }
  return out;
}

}  // namespace

std::string ToString(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kGraph:
      return "graph";
    case Algorithm::kExhaustive:
      return "exhaustive";
    case Algorithm::kGreedy:
      return "greedy";
    case Algorithm::kRandom:
      return "random";
  }
  return "unknown";
}

Algorithm ParseAlgorithm(const std::string& name) {
  for (Algorithm a : AllAlgorithms()) {
    if (ToString(a) == name) return a;
  }
  throw InvalidParameterError("unknown algorithm '" + name +
                              "' (expected graph, exhaustive, greedy or random)");
}

std::vector<Algorithm> ParseAlgorithmList(const std::string& list) {
  std::vector<Algorithm> out;
  std::istringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    out.push_back(ParseAlgorithm(item));
  }
  if (out.empty()) throw InvalidParameterError("empty algorithm list");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Algorithm> AllAlgorithms() {
  return {Algorithm::kGraph, Algorithm::kExhaustive, Algorithm::kGreedy,
          Algorithm::kRandom};
}

ResourceAssignment RunAlgorithm(Algorithm algorithm, const WeightMatrix& weights,
                                const MacroPartition& partition,
                                std::size_t n_real_vehicles, std::uint64_t random_seed) {
  switch (algorithm) {
    case Algorithm::kGraph:
      return SolveConstrained(weights, partition);
    case Algorithm::kGreedy:
      return GreedyAssign(weights, partition);
    case Algorithm::kRandom:
      return RandomAssign(weights, partition, random_seed);
    case Algorithm::kExhaustive: {
      if (n_real_vehicles == 0 || n_real_vehicles > weights.rows()) {
        throw DimensionError("exhaustive search needs 1..rows real vehicles");
      }
      const WeightMatrix real(n_real_vehicles, weights.cols(),
                              std::vector<double>(weights.data().begin(),
                                                  weights.data().begin() +
                                                      n_real_vehicles * weights.cols()),
                              weights.bandwidth_mhz());
      return CompleteWithDummies(weights, partition, ExhaustiveSearch(real, partition));
    }
  }
  throw InvalidParameterError("unknown algorithm");
}

std::vector<double> ExperimentReport::ClusterValues(Algorithm algorithm) const {
  std::vector<double> values;
  bool open = false;
  std::size_t trial = 0, cluster = 0;
  for (const VehicleRate& r : rates) {
    if (r.algorithm != algorithm) continue;
    if (!open || r.trial != trial || r.cluster != cluster) {
      values.push_back(0.0);
      open = true;
      trial = r.trial;
      cluster = r.cluster;
    }
    values.back() += r.rate;
  }
  return values;
}

std::vector<double> ExperimentReport::RatesOf(Algorithm algorithm) const {
  std::vector<double> out;
  for (const VehicleRate& r : rates) {
    if (r.algorithm == algorithm) out.push_back(r.rate);
  }
  return out;
}

const AlgorithmSummary* ExperimentReport::SummaryOf(Algorithm algorithm) const {
  for (const AlgorithmSummary& s : summaries) {
    if (s.algorithm == algorithm) return &s;
  }
  return nullptr;
}

std::optional<double> ExperimentReport::MedianSolveSeconds(Algorithm algorithm) const {
  std::vector<double> samples;
  for (const SolveTiming& t : timings) {
    if (t.algorithm == algorithm) samples.push_back(t.seconds);
  }
  if (samples.empty()) return std::nullopt;
  const std::size_t mid = samples.size() / 2;
  std::nth_element(samples.begin(), samples.begin() + mid, samples.end());
  if (samples.size() % 2 == 1) return samples[mid];
  const double upper = samples[mid];
  const double lower = *std::max_element(samples.begin(), samples.begin() + mid);
  return 0.5 * (lower + upper);
}

ExperimentReport RunExperiment(const ScenarioConfig& config,
                               const std::vector<Algorithm>& algorithms,
                               std::size_t n_trials, const ExperimentOptions& options) {
  ValidateConfig(config);
  std::vector<Algorithm> algos = algorithms;
  std::sort(algos.begin(), algos.end());
  algos.erase(std::unique(algos.begin(), algos.end()), algos.end());
  if (std::find(algos.begin(), algos.end(), Algorithm::kExhaustive) != algos.end() &&
      config.vehicles_per_cluster > kMaxExhaustiveVehicles) {
    throw SizeLimitError("exhaustive search needs vehicles_per_cluster <= " +
                         std::to_string(kMaxExhaustiveVehicles));
  }

  ExperimentReport report;
  report.config = config;
  report.n_trials = n_trials;
  report.algorithms = algos;
  if (n_trials == 0 || algos.empty()) return report;

  std::vector<TrialOutput> outputs(n_trials);
  const std::size_t workers = std::clamp<std::size_t>(options.threads, 1, n_trials);
  if (workers == 1) {
    for (std::size_t t = 0; t < n_trials; ++t) {
      outputs[t] = RunTrial(config, algos, t, options.record_timings);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    {
      std::vector<std::jthread> pool;
      for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          try {
            for (std::size_t t = next++; t < n_trials; t = next++) {
              outputs[t] = RunTrial(config, algos, t, options.record_timings);
            }
          } catch (...) {
            errors[w] = std::current_exception();
            next = n_trials;
          }
        });
      }
    }
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  double max_weight = 0.0;
  for (TrialOutput& out : outputs) {
    max_weight = std::max(max_weight, out.max_weight);
    report.rates.insert(report.rates.end(), out.rates.begin(), out.rates.end());
    report.timings.insert(report.timings.end(), out.timings.begin(), out.timings.end());
  }

  // Per-trial metrics over all clusters' real vehicles.
  for (std::size_t t = 0; t < n_trials; ++t) {
    for (Algorithm a : algos) {
      std::vector<double> pooled;
      for (const VehicleRate& r : outputs[t].rates) {
        if (r.algorithm == a) pooled.push_back(r.rate);
      }
      report.trial_metrics.push_back({t, a, ComputeMetrics(pooled)});
    }
  }

  report.cdf_grid = options.cdf_grid.empty()
                        ? DefaultCdfGrid(max_weight, options.cdf_points)
                        : options.cdf_grid;
  for (Algorithm a : algos) {
    AlgorithmSummary summary{a, {}, {}};
    for (const TrialMetrics& tm : report.trial_metrics) {
      if (tm.algorithm != a) continue;
      summary.mean_metrics.highest_rate += tm.metrics.highest_rate;
      summary.mean_metrics.worst_rate += tm.metrics.worst_rate;
      summary.mean_metrics.mean_rate += tm.metrics.mean_rate;
      summary.mean_metrics.std_rate += tm.metrics.std_rate;
    }
    const double n = static_cast<double>(n_trials);
    summary.mean_metrics.highest_rate /= n;
    summary.mean_metrics.worst_rate /= n;
    summary.mean_metrics.mean_rate /= n;
    summary.mean_metrics.std_rate /= n;
    summary.cdf = ComputeCdf(report.RatesOf(a), report.cdf_grid);
    report.summaries.push_back(std::move(summary));
  }
  return report;
}

}  // namespace sidelink
