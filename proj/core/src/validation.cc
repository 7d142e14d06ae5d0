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

#include "sidelink/validation.h"

#include <cmath>
#include <sstream>
#include <string>

#include "sidelink/baselines.h"
#include "sidelink/constraint_matrix.h"
#include "sidelink/errors.h"
#include "sidelink/matching.h"
#include "sidelink/random.h"
#include "sidelink/reduction.h"

namespace sidelink {
namespace {

WeightMatrix UniformWeights(Rng& rng, std::size_t rows, std::size_t cols) {
  std::vector<double> data(rows * cols);
  for (double& w : data) w = 10.0 * rng.uniform01();
  return WeightMatrix(rows, cols, std::move(data));
}

std::string Describe(const char* what, std::size_t instance, std::size_t n,
                     std::size_t k, double got, double want) {
  std::ostringstream msg;
  msg.precision(17);
  msg << what << " (instance " << instance << ", N=" << n << ", K=" << k
      << "): " << got << " vs " << want;
  return msg.str();
}

}  // namespace

ValidationResult RunValidation(const ValidationOptions& options) {
  if (options.max_n == 0 || options.max_n > kMaxExhaustiveVehicles) {
    throw InvalidParameterError("max_n must be in [1, " +
                                std::to_string(kMaxExhaustiveVehicles) + "]");
  }
  if (options.max_k == 0) throw InvalidParameterError("max_k must be >= 1");
  if (options.max_square_n == 0 || options.max_square_n > kMaxBruteForceSize) {
    throw InvalidParameterError("max_square_n must be in [1, " +
                                std::to_string(kMaxBruteForceSize) + "]");
  }

  ValidationResult result;
  Rng rng(options.seed);
  const std::size_t min_n = options.max_n >= 2 ? 2 : 1;
  for (std::size_t inst = 0; inst < options.instances; ++inst) {
    const std::size_t n = min_n + rng.below(options.max_n - min_n + 1);
    const std::size_t k = 1 + rng.below(options.max_k);
    const MacroPartition partition(n, k);
    const WeightMatrix weights = UniformWeights(rng, n, n * k);

    const ResourceAssignment graph = SolveConstrained(weights, partition);
    const ResourceAssignment exhaustive = ExhaustiveSearch(weights, partition);
    const ResourceAssignment greedy = GreedyAssign(weights, partition);
    const ResourceAssignment random = RandomAssign(weights, partition, rng.next());
    ++result.constrained_instances;

    if (std::abs(graph.value - exhaustive.value) > options.tolerance) {
      result.failures.push_back(
          Describe("graph != exhaustive", inst, n, k, graph.value, exhaustive.value));
    }
    if (greedy.value > graph.value + options.tolerance) {
      result.failures.push_back(
          Describe("greedy beats optimum", inst, n, k, greedy.value, graph.value));
    }
    if (random.value > graph.value + options.tolerance) {
      result.failures.push_back(
          Describe("random beats optimum", inst, n, k, random.value, graph.value));
    }
    const std::pair<const char*, const ResourceAssignment*> outputs[] = {
        {"graph", &graph}, {"exhaustive", &exhaustive}, {"greedy", &greedy},
        {"random", &random}};
    for (const auto& [name, assignment] : outputs) {
      ++result.assignments_checked;
      const FeasibilityReport check = VerifyAssignmentFeasibility(*assignment, n, k);
      if (!check.feasible) {
        std::string msg = std::string(name) + " infeasible (instance " +
                          std::to_string(inst) + "):";
        for (const auto& v : check.violations) msg += " " + v + ";";
        result.failures.push_back(msg);
      }
    }

    const std::size_t sq = 1 + rng.below(options.max_square_n);
    const WeightMatrix square = UniformWeights(rng, sq, sq);
    const PerfectMatching fast = SolveAssignment(square);
    const PerfectMatching slow = BruteForceAssignment(square);
    ++result.square_instances;
    if (std::abs(fast.value - slow.value) > options.tolerance) {
      result.failures.push_back(
          Describe("Kuhn-Munkres != brute force", inst, sq, 1, fast.value, slow.value));
    }
    if (!ValidatePerfectMatching(fast, sq).empty()) {
      result.failures.push_back("Kuhn-Munkres output is not a permutation (instance " +
                                std::to_string(inst) + ")");
    }
  }
  return result;
}

}  // namespace sidelink
