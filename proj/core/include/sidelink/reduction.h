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

#ifndef SIDELINK_REDUCTION_H_
#define SIDELINK_REDUCTION_H_

#include <cstddef>
#include <vector>

#include "sidelink/assignment.h"
#include "sidelink/matching.h"
#include "sidelink/partition.h"
#include "sidelink/weight_matrix.h"

namespace sidelink {

// The macro-vertex problem: an N x N matrix whose (i, s) entry is the best
// rate vehicle i can get anywhere in subframe s, together with the resource
// that achieves it.
struct ReducedProblem {
  WeightMatrix reduced;
  std::vector<std::size_t> witness;  // row-major N x N, resource indices
  MacroPartition partition;

  std::size_t witness_at(std::size_t vehicle, std::size_t subframe) const {
    return witness[vehicle * partition.subframes() + subframe];
  }
};

// Hard aggregation: reduced(i, s) = max over the block of s, witness is the
// argmax with ties going to the lowest resource index. The weights must be
// N x K*N for the partition's N and K; DimensionError otherwise.
ReducedProblem ReduceHard(const WeightMatrix& weights,
                          const MacroPartition& partition);

// Soft aggregation (1/beta) * ln(sum over block of exp(beta * c)), computed
// as max + ln(sum exp(beta * (c - max))) / beta so that beta * c never has
// to be exponentiated directly. Exceeds the hard maximum by at most
// ln(K) / beta.
//
// Throws InvalidParameterError unless beta is finite and positive, and
// NumericError if the result is still not finite.
WeightMatrix ReduceSoft(const WeightMatrix& weights,
                        const MacroPartition& partition, double beta);

// Maps a matching on the reduced problem back to resources: vehicle i gets
// witness(i, matching[i]). Throws InternalInvariantError when the witness
// table is inconsistent with the partition or the reduced weights, and
// BoundsError when the matching is not a permutation of the subframes.
ResourceAssignment ExpandMatching(const PerfectMatching& reduced_matching,
                                  const ReducedProblem& problem,
                                  const WeightMatrix& weights);

// Optimal conflict-free allocation: ReduceHard, SolveAssignment on the
// N x N macro problem, ExpandMatching. O(N^3) plus O(K N^2) for the
// reduction.
ResourceAssignment SolveConstrained(const WeightMatrix& weights,
                                    const MacroPartition& partition);

}  // namespace sidelink

#endif  // SIDELINK_REDUCTION_H_
