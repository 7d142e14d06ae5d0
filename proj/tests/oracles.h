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

// Reference implementations used only by tests. They share no code path
// with the library algorithms they check.

#ifndef SIDELINK_TESTS_ORACLES_H_
#define SIDELINK_TESTS_ORACLES_H_

#include <cstddef>
#include <random>
#include <vector>

#include "sidelink/partition.h"
#include "sidelink/weight_matrix.h"

namespace sidelink::testing {

inline WeightMatrix RandomWeights(std::mt19937_64& gen, std::size_t rows,
                                  std::size_t cols, double hi = 10.0) {
  std::uniform_real_distribution<double> dist(0.0, hi);
  std::vector<double> data(rows * cols);
  for (double& w : data) w = dist(gen);
  return WeightMatrix(rows, cols, std::move(data));
}

// Best sum over all permutations by plain recursion on a used-column mask.
inline double PermutationOptimum(const WeightMatrix& w) {
  const std::size_t n = w.rows();
  std::vector<char> used(n, 0);
  double best = -1.0;
  auto go = [&](auto&& self, std::size_t row, double acc) -> void {
    if (row == n) {
      if (acc > best) best = acc;
      return;
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c]) continue;
      used[c] = 1;
      self(self, row + 1, acc + w(row, c));
      used[c] = 0;
    }
  };
  go(go, 0, 0.0);
  return best;
}

struct ConstrainedOptimum {
  double value = -1.0;
  std::vector<std::size_t> resources;  // lexicographically smallest optimum
};

// Enumerates every vehicle -> resource map, (K N)^m of them, keeps those
// whose subframes are pairwise distinct, and returns the best. Unlike the
// library's exhaustive search it does not reduce to per-subframe maxima.
inline ConstrainedOptimum FullEnumerationOptimum(const WeightMatrix& w,
                                                 const MacroPartition& p) {
  const std::size_t m = w.rows();
  ConstrainedOptimum best;
  std::vector<std::size_t> pick(m);
  std::vector<char> used(p.subframes(), 0);
  auto go = [&](auto&& self, std::size_t row) -> void {
    if (row == m) {
      double value = 0.0;
      for (std::size_t i = 0; i < m; ++i) value += w(i, pick[i]);
      if (value > best.value) best = {value, pick};
      return;
    }
    for (std::size_t j = 0; j < p.resources(); ++j) {
      const std::size_t s = j / p.per_subframe();
      if (used[s]) continue;
      used[s] = 1;
      pick[row] = j;
      self(self, row + 1);
      used[s] = 0;
    }
  };
  go(go, 0);
  return best;
}

// Every feasible vehicle -> resource map of the instance.
inline std::vector<std::vector<std::size_t>> AllFeasibleMaps(const MacroPartition& p,
                                                             std::size_t m) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> pick(m);
  std::vector<char> used(p.subframes(), 0);
  auto go = [&](auto&& self, std::size_t row) -> void {
    if (row == m) {
      out.push_back(pick);
      return;
    }
    for (std::size_t j = 0; j < p.resources(); ++j) {
      const std::size_t s = j / p.per_subframe();
      if (used[s]) continue;
      used[s] = 1;
      pick[row] = j;
      self(self, row + 1);
      used[s] = 0;
    }
  };
  go(go, 0);
  return out;
}

}  // namespace sidelink::testing

#endif  // SIDELINK_TESTS_ORACLES_H_
