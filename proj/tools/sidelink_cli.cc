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

// Command line front end: solve one instance, run simulations, or validate
// the solvers against brute force.

#include <cstdint>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sidelink/errors.h"
#include "sidelink/experiment.h"
#include "sidelink/report_io.h"
#include "sidelink/scenario.h"
#include "sidelink/scenario_io.h"
#include "sidelink/validation.h"
#include "sidelink/weights_io.h"

namespace {

using namespace sidelink;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct SolveArgs {
  std::string weights;
  std::size_t subframes = 0;
  std::size_t per_subframe = 0;
  std::string algo;
  std::uint64_t seed = 1;
};

struct SimulateArgs {
  std::string config;
  std::size_t trials = 1000;
  std::string algos = "graph,exhaustive,greedy,random";
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "csv";
  std::size_t threads = 1;
  bool timings = false;
};

int RunSolve(const SolveArgs& args) {
  const Algorithm algorithm = ParseAlgorithm(args.algo);
  const WeightMatrix weights = LoadWeightsCsv(args.weights);
  const MacroPartition partition(args.subframes, args.per_subframe);
  if (weights.cols() != partition.resources()) {
    throw DimensionError("weight file has " + std::to_string(weights.cols()) +
                         " columns but subframes x per-subframe = " +
                         std::to_string(partition.resources()));
  }
  const std::size_t n_real = weights.rows();
  const PaddedWeights padded = PadCluster(weights, partition.subframes());
  const ResourceAssignment a =
      RunAlgorithm(algorithm, padded.weights, partition, n_real, args.seed);

  std::string resources, subframes, rates;
  double value = 0.0;
  for (std::size_t v = 0; v < n_real; ++v) {
    const std::size_t r = a.vehicle_to_resource[v];
    const double rate = weights(v, r);
    value += rate;
    const char* sep = v == 0 ? "" : " ";
    resources += sep + std::to_string(r);
    subframes += sep + std::to_string(a.subframe_of[v]);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%s%.6f", sep, rate);
    rates += buf;
  }
  std::printf("algorithm: %s\n", ToString(algorithm).c_str());
  std::printf("resources: %s\n", resources.c_str());
  std::printf("subframes: %s\n", subframes.c_str());
  std::printf("rates: %s\n", rates.c_str());
  std::printf("value: %.6f\n", value);
  return kExitOk;
}

int RunSimulate(const SimulateArgs& args, bool seed_given) {
  ScenarioConfig config = LoadConfig(args.config);
  if (seed_given) config.seed = args.seed;
  const std::vector<Algorithm> algorithms = ParseAlgorithmList(args.algos);
  const ReportFormat format = ParseReportFormat(args.format);
  ExperimentOptions options;
  options.threads = args.threads;
  options.record_timings = args.timings;
  const ExperimentReport report = RunExperiment(config, algorithms, args.trials, options);
  ExportReport(report, format, args.out, {.include_timings = args.timings});
  for (const AlgorithmSummary& s : report.summaries) {
    const Metrics& m = s.mean_metrics;
    std::printf("%-10s highest %.6f worst %.6f mean %.6f std %.6f\n",
                ToString(s.algorithm).c_str(), m.highest_rate, m.worst_rate, m.mean_rate,
                m.std_rate);
  }
  std::printf("wrote %s report for %zu trials to %s\n", args.format.c_str(), args.trials,
              args.out.c_str());
  return kExitOk;
}

int RunValidate(const ValidationOptions& options) {
  const ValidationResult result = RunValidation(options);
  std::printf("constrained instances: %zu\n", result.constrained_instances);
  std::printf("square instances: %zu\n", result.square_instances);
  std::printf("assignments checked: %zu\n", result.assignments_checked);
  for (const std::string& f : result.failures) std::fprintf(stderr, "FAIL: %s\n", f.c_str());
  std::printf("%s\n", result.ok() ? "validation passed" : "validation FAILED");
  return result.ok() ? kExitOk : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conflict-aware sidelink resource allocation"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "Solve one weight matrix");
  solve->add_option("--weights", solve_args.weights, "CSV weight matrix")->required();
  solve->add_option("--subframes", solve_args.subframes, "Number of subframes")->required();
  solve->add_option("--per-subframe", solve_args.per_subframe, "Resources per subframe")
      ->required();
  solve->add_option("--algo", solve_args.algo, "graph, exhaustive, greedy or random")
      ->required();
  solve->add_option("--seed", solve_args.seed, "Seed for the random algorithm");

  SimulateArgs sim_args;
  CLI::App* simulate = app.add_subcommand("simulate", "Run a Monte Carlo experiment");
  simulate->add_option("--config", sim_args.config, "Scenario JSON file")->required();
  simulate->add_option("--trials", sim_args.trials, "Number of trials");
  simulate->add_option("--algos", sim_args.algos, "Comma-separated algorithms");
  CLI::Option* seed_opt = simulate->add_option("--seed", sim_args.seed, "Override config seed");
  simulate->add_option("--out", sim_args.out, "Output directory")->required();
  simulate->add_option("--format", sim_args.format, "csv or json");
  simulate->add_option("--threads", sim_args.threads, "Worker threads")
      ->check(CLI::PositiveNumber);
  simulate->add_flag("--timings", sim_args.timings, "Also export per-solve timings");

  ValidationOptions val_opts;
  CLI::App* validate = app.add_subcommand("validate", "Check solvers against brute force");
  validate->add_option("--instances", val_opts.instances, "Constrained instances");
  validate->add_option("--max-n", val_opts.max_n, "Largest subframe count");
  validate->add_option("--max-k", val_opts.max_k, "Largest resources per subframe");
  validate->add_option("--seed", val_opts.seed, "Seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (solve->parsed()) return RunSolve(solve_args);
    if (simulate->parsed()) return RunSimulate(sim_args, seed_opt->count() > 0);
    return RunValidate(val_opts);
  } catch (const IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitIo;
  } catch (const InternalInvariantError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitValidation;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitValidation;
  }
}
