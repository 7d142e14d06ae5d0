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

#include "sidelink/reduction.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "sidelink/errors.h"

namespace sidelink {
namespace {

void RequireReducible(const WeightMatrix& weights,
                      const MacroPartition& partition) {
  if (weights.rows() != partition.subframes() ||
      weights.cols() != partition.resources()) {
    throw DimensionError(
        "constrained instance must be N x K*N = " +
        std::to_string(partition.subframes()) + "x" +
        std::to_string(partition.resources()) + ", got " +
        std::to_string(weights.rows()) + "x" + std::to_string(weights.cols()));
  }
}

}  // namespace

ReducedProblem ReduceHard(const WeightMatrix& weights,
                          const MacroPartition& partition) {
  RequireReducible(weights, partition);
  const std::size_t n = partition.subframes();
  std::vector<double> best(n * n);
  std::vector<std::size_t> witness(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = weights.row(i);
    for (std::size_t s = 0; s < n; ++s) {
      // max_element returns the first maximum, i.e. the lowest index.
      const auto first = row.begin() + partition.block_begin(s);
      const auto it = std::max_element(first, row.begin() + partition.block_end(s));
      best[i * n + s] = *it;
      witness[i * n + s] = static_cast<std::size_t>(it - row.begin());
    }
  }
  return ReducedProblem{WeightMatrix(n, n, std::move(best), weights.bandwidth_mhz()),
                        std::move(witness), partition};
}

WeightMatrix ReduceSoft(const WeightMatrix& weights,
                        const MacroPartition& partition, double beta) {
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw InvalidParameterError("soft aggregation needs finite beta > 0, got " +
                                std::to_string(beta));
  }
  RequireReducible(weights, partition);
  const std::size_t n = partition.subframes();
  std::vector<double> out(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = weights.row(i);
    for (std::size_t s = 0; s < n; ++s) {
      const auto block = row.subspan(partition.block_begin(s), partition.per_subframe());
      const double peak = *std::max_element(block.begin(), block.end());
      double sum = 0.0;
      for (double c : block) sum += std::exp(beta * (c - peak));
      const double value = peak + std::log(sum) / beta;
      if (!std::isfinite(value)) {
        throw NumericError("log-sum-exp overflow at (" + std::to_string(i) +
                           ", " + std::to_string(s) + ") for beta = " +
                           std::to_string(beta));
      }
      out[i * n + s] = value;
    }
  }
  return WeightMatrix(n, n, std::move(out), weights.bandwidth_mhz());
}

ResourceAssignment ExpandMatching(const PerfectMatching& reduced_matching,
                                  const ReducedProblem& problem,
                                  const WeightMatrix& weights) {
  const MacroPartition& partition = problem.partition;
  const std::size_t n = partition.subframes();
  if (reduced_matching.assignment.size() != n) {
    throw BoundsError("reduced matching covers " +
                      std::to_string(reduced_matching.assignment.size()) +
                      " vehicles, expected " + std::to_string(n));
  }
  if (problem.witness.size() != n * n || problem.reduced.rows() != n ||
      problem.reduced.cols() != n) {
    throw InternalInvariantError("reduced problem does not match its partition");
  }
  std::vector<std::size_t> resources(n);
  std::vector<char> seen(n, 0);
  double value = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t s = reduced_matching.assignment[i];
    if (s >= n || seen[s]) {
      throw BoundsError("reduced matching is not a permutation of subframes");
    }
    seen[s] = 1;
    const std::size_t j = problem.witness_at(i, s);
    if (partition.subframe_of(j) != s || j >= weights.cols() ||
        weights(i, j) != problem.reduced(i, s)) {
      throw InternalInvariantError("witness for vehicle " + std::to_string(i) +
                                   ", subframe " + std::to_string(s) +
                                   " is inconsistent");
    }
    resources[i] = j;
    value += problem.reduced(i, s);
  }
  ResourceAssignment out = MakeAssignment(weights, partition, std::move(resources));
  if (out.value != value) {
    throw InternalInvariantError("expanded value differs from reduced value");
  }
  return out;
}

ResourceAssignment SolveConstrained(const WeightMatrix& weights,
                                    const MacroPartition& partition) {
  const ReducedProblem problem = ReduceHard(weights, partition);
  const PerfectMatching matching = SolveAssignment(problem.reduced);
  return ExpandMatching(matching, problem, weights);
}

}  // namespace sidelink
