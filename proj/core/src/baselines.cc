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

#include "sidelink/baselines.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "sidelink/errors.h"
#include "sidelink/random.h"

namespace sidelink {
namespace {

void RequireRows(const WeightMatrix& weights, const MacroPartition& partition) {
  if (weights.cols() != partition.resources()) {
    throw DimensionError("weights have " + std::to_string(weights.cols()) +
                         " resources, partition has " +
                         std::to_string(partition.resources()));
  }
  if (weights.rows() > partition.subframes()) {
    throw OverloadError(std::to_string(weights.rows()) + " vehicles for " +
                        std::to_string(partition.subframes()) + " subframes");
  }
}

// First maximum inside subframe s of row i.
std::size_t BlockArgmax(const WeightMatrix& weights, const MacroPartition& partition,
                        std::size_t i, std::size_t s) {
  const auto row = weights.row(i);
  const auto it = std::max_element(row.begin() + partition.block_begin(s),
                                   row.begin() + partition.block_end(s));
  return static_cast<std::size_t>(it - row.begin());
}

std::uint64_t Arrangements(std::size_t n, std::size_t m, std::uint64_t cap) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < m; ++i) {
    count *= (n - i);
    if (count > cap) return cap + 1;
  }
  return count;
}

}  // namespace

ResourceAssignment ExhaustiveSearch(const WeightMatrix& weights,
                                    const MacroPartition& partition) {
  RequireRows(weights, partition);
  const std::size_t m = weights.rows();
  const std::size_t n = partition.subframes();
  if (m > kMaxExhaustiveVehicles) {
    throw SizeLimitError("exhaustive search limited to " +
                         std::to_string(kMaxExhaustiveVehicles) +
                         " vehicles, got " + std::to_string(m));
  }
  if (Arrangements(n, m, kMaxExhaustiveArrangements) > kMaxExhaustiveArrangements) {
    throw SizeLimitError("exhaustive search over " + std::to_string(m) +
                         " vehicles and " + std::to_string(n) +
                         " subframes exceeds the enumeration guard");
  }

  // best_in[i * n + s]: resource vehicle i would take inside subframe s.
  std::vector<std::size_t> best_in(m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t s = 0; s < n; ++s) best_in[i * n + s] = BlockArgmax(weights, partition, i, s);

  // Depth-first over injective vehicle -> subframe maps in lexicographic
  // order; strict improvement keeps the first optimum.
  std::vector<std::size_t> chosen(m), best_choice;
  std::vector<char> used(n, 0);
  double best_value = -1.0;
  auto visit = [&](auto&& self, std::size_t vehicle) -> void {
    if (vehicle == m) {
      double value = 0.0;
      for (std::size_t i = 0; i < m; ++i) value += weights(i, best_in[i * n + chosen[i]]);
      if (value > best_value) {
        best_value = value;
        best_choice = chosen;
      }
      return;
    }
    for (std::size_t s = 0; s < n; ++s) {
      if (used[s]) continue;
      used[s] = 1;
      chosen[vehicle] = s;
      self(self, vehicle + 1);
      used[s] = 0;
    }
  };
  visit(visit, 0);

  std::vector<std::size_t> resources(m);
  for (std::size_t i = 0; i < m; ++i) resources[i] = best_in[i * n + best_choice[i]];
  return MakeAssignment(weights, partition, std::move(resources));
}

ResourceAssignment GreedyAssign(const WeightMatrix& weights,
                                const MacroPartition& partition) {
  RequireRows(weights, partition);
  std::vector<char> taken(partition.subframes(), 0);
  std::vector<std::size_t> resources(weights.rows());
  for (std::size_t i = 0; i < weights.rows(); ++i) {
    std::size_t pick = partition.resources();
    for (std::size_t j = 0; j < partition.resources(); ++j) {
      if (taken[partition.subframe_of(j)]) continue;
      if (pick == partition.resources() || weights(i, j) > weights(i, pick)) pick = j;
    }
    taken[partition.subframe_of(pick)] = 1;
    resources[i] = pick;
  }
  return MakeAssignment(weights, partition, std::move(resources));
}

ResourceAssignment RandomAssign(const WeightMatrix& weights,
                                const MacroPartition& partition, std::uint64_t seed) {
  RequireRows(weights, partition);
  Rng rng(seed);
  std::vector<std::size_t> subframes(partition.subframes());
  std::iota(subframes.begin(), subframes.end(), 0);
  // Fisher-Yates with the portable draw.
  for (std::size_t i = subframes.size(); i > 1; --i) {
    std::swap(subframes[i - 1], subframes[rng.below(i)]);
  }
  std::vector<std::size_t> resources(weights.rows());
  for (std::size_t i = 0; i < weights.rows(); ++i) {
    resources[i] = partition.block_begin(subframes[i]) + rng.below(partition.per_subframe());
  }
  return MakeAssignment(weights, partition, std::move(resources));
}

}  // namespace sidelink
