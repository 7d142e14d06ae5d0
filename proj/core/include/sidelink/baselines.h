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

#ifndef SIDELINK_BASELINES_H_
#define SIDELINK_BASELINES_H_

#include <cstddef>
#include <cstdint>

#include "sidelink/assignment.h"
#include "sidelink/partition.h"
#include "sidelink/weight_matrix.h"

namespace sidelink {

// The comparison algorithms. All of them accept m <= N vehicle rows against
// the K*N resources of the partition, and all of them return conflict-free
// assignments.

inline constexpr std::size_t kMaxExhaustiveVehicles = 8;
inline constexpr std::uint64_t kMaxExhaustiveArrangements = 10'000'000;

// Optimal allocation by enumerating every injective vehicle -> subframe map
// in lexicographic order. For a fixed map, vehicles choose independently
// inside their subframe, so the in-block argmax (lowest index on ties) is
// taken. Ties between maps go to the first one found, which is the
// lexicographically smallest resource sequence.
//
// Throws SizeLimitError when m > kMaxExhaustiveVehicles or the number of
// maps N!/(N-m)! exceeds kMaxExhaustiveArrangements.
ResourceAssignment ExhaustiveSearch(const WeightMatrix& weights,
                                    const MacroPartition& partition);

// First-come first-served: vehicles in index order each take their best
// resource among subframes nobody has taken yet.
ResourceAssignment GreedyAssign(const WeightMatrix& weights,
                                const MacroPartition& partition);

// Uniformly random subframe permutation, then a uniform resource inside
// each vehicle's subframe. Same seed, same output.
ResourceAssignment RandomAssign(const WeightMatrix& weights,
                                const MacroPartition& partition,
                                std::uint64_t seed);

}  // namespace sidelink

#endif  // SIDELINK_BASELINES_H_
