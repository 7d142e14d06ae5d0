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

#ifndef SIDELINK_METRICS_H_
#define SIDELINK_METRICS_H_

#include <cstddef>
#include <span>
#include <vector>

namespace sidelink {

// Summary of per-vehicle rates, all in Mbit/s. std_rate is the sample
// standard deviation (divisor n-1), zero for a single vehicle.
struct Metrics {
  double highest_rate = 0.0;
  double worst_rate = 0.0;
  double mean_rate = 0.0;
  double std_rate = 0.0;

  bool operator==(const Metrics&) const = default;
};

// Throws EmptyInputError for an empty sequence.
Metrics ComputeMetrics(std::span<const double> rates);

// Fraction of rates strictly below each threshold. The grid must be
// strictly ascending (InvalidParameterError) and rates non-empty
// (EmptyInputError).
std::vector<double> ComputeCdf(std::span<const double> rates,
                               std::span<const double> grid);

// `points` evenly spaced thresholds from 0 to upper inclusive.
std::vector<double> DefaultCdfGrid(double upper, std::size_t points = 30);

}  // namespace sidelink

#endif  // SIDELINK_METRICS_H_
