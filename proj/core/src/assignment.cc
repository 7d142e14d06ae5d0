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

#include "sidelink/assignment.h"

#include <string>
#include <utility>

#include "sidelink/errors.h"

namespace sidelink {

ResourceAssignment MakeAssignment(const WeightMatrix& weights,
                                  const MacroPartition& partition,
                                  std::vector<std::size_t> resources) {
  if (weights.cols() != partition.resources()) {
    throw DimensionError("weights have " + std::to_string(weights.cols()) +
                         " resources, partition has " +
                         std::to_string(partition.resources()));
  }
  if (resources.size() > weights.rows()) {
    throw DimensionError("more assigned vehicles than weight rows");
  }
  ResourceAssignment out;
  out.subframe_of.reserve(resources.size());
  for (std::size_t i = 0; i < resources.size(); ++i) {
    if (resources[i] >= partition.resources()) {
      throw BoundsError("vehicle " + std::to_string(i) + " assigned resource " +
                        std::to_string(resources[i]) + " outside [0, " +
                        std::to_string(partition.resources()) + ")");
    }
    out.subframe_of.push_back(partition.subframe_of(resources[i]));
    out.value += weights(i, resources[i]);
  }
  out.vehicle_to_resource = std::move(resources);
  return out;
}

std::vector<double> VehicleRates(const WeightMatrix& weights,
                                 const ResourceAssignment& assignment) {
  std::vector<double> rates;
  rates.reserve(assignment.size());
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    rates.push_back(weights(i, assignment.vehicle_to_resource[i]));
  }
  return rates;
}

}  // namespace sidelink
