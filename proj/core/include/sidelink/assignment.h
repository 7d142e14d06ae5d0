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

#ifndef SIDELINK_ASSIGNMENT_H_
#define SIDELINK_ASSIGNMENT_H_

#include <cstddef>
#include <vector>

#include "sidelink/partition.h"
#include "sidelink/weight_matrix.h"

namespace sidelink {

// Vehicle -> resource allocation for one cluster. Produced by every
// allocation algorithm; feasibility (one resource per vehicle, no subframe
// used twice) is checked separately by VerifyAssignmentFeasibility.
struct ResourceAssignment {
  std::vector<std::size_t> vehicle_to_resource;
  std::vector<std::size_t> subframe_of;
  double value = 0.0;

  std::size_t size() const { return vehicle_to_resource.size(); }

  bool operator==(const ResourceAssignment&) const = default;
};

// Fills subframe_of and value from the chosen resources. Throws
// DimensionError when the weights do not match the partition and
// BoundsError for a resource index outside [0, K*N).
ResourceAssignment MakeAssignment(const WeightMatrix& weights,
                                  const MacroPartition& partition,
                                  std::vector<std::size_t> resources);

// Per-vehicle rates weights(i, resource[i]).
std::vector<double> VehicleRates(const WeightMatrix& weights,
                                 const ResourceAssignment& assignment);

}  // namespace sidelink

#endif  // SIDELINK_ASSIGNMENT_H_
