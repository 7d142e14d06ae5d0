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

#ifndef SIDELINK_MATCHING_H_
#define SIDELINK_MATCHING_H_

#include <cstddef>
#include <string>
#include <vector>

#include "sidelink/weight_matrix.h"

namespace sidelink {

// A one-to-one pairing of rows to columns of a square weight matrix.
// assignment[i] is the column matched to row i; value is the total weight.
struct PerfectMatching {
  std::vector<std::size_t> assignment;
  double value = 0.0;

  bool operator==(const PerfectMatching&) const = default;
};

// Maximum-weight perfect matching via Kuhn-Munkres in O(n^3).
//
// Weights are mapped to costs (max entry - w) and the shortest augmenting
// path variant with row/column potentials minimizes them. The result is
// deterministic for a fixed input but among several optima it is not
// necessarily the lexicographically smallest one.
//
// Throws DimensionError for non-square input.
PerfectMatching SolveAssignment(const WeightMatrix& weights);

// Enumerates all n! permutations in lexicographic order and keeps the first
// one of maximum value, so ties resolve to the lexicographically smallest
// assignment. Throws SizeLimitError when n > kMaxBruteForceSize.
inline constexpr std::size_t kMaxBruteForceSize = 10;
PerfectMatching BruteForceAssignment(const WeightMatrix& weights);

// Sum of weights(i, assignment[i]). Throws BoundsError when the assignment
// has the wrong length or points outside the matrix.
double MatchingValue(const WeightMatrix& weights,
                     const std::vector<std::size_t>& assignment);
inline double MatchingValue(const WeightMatrix& weights,
                            const PerfectMatching& matching) {
  return MatchingValue(weights, matching.assignment);
}

// Structural check of the one-to-one constraints. Returns one message per
// violated constraint, empty when the assignment is a permutation of
// {0, ..., n-1}.
std::vector<std::string> ValidatePerfectMatching(const PerfectMatching& m,
                                                 std::size_t n);

}  // namespace sidelink

#endif  // SIDELINK_MATCHING_H_
