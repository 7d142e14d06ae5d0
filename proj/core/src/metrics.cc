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

#include "sidelink/metrics.h"

#include <algorithm>
#include <cmath>

#include "sidelink/errors.h"

namespace sidelink {

Metrics ComputeMetrics(std::span<const double> rates) {
  if (rates.empty()) throw EmptyInputError("metrics need at least one rate");
  const auto [lo, hi] = std::minmax_element(rates.begin(), rates.end());
  double sum = 0.0;
  for (double r : rates) sum += r;
  const double n = static_cast<double>(rates.size());
  const double mean = sum / n;
  double sq = 0.0;
  for (double r : rates) sq += (r - mean) * (r - mean);
  const double std_rate = rates.size() > 1 ? std::sqrt(sq / (n - 1.0)) : 0.0;
  // Clamp rounding so that worst <= mean <= highest holds exactly.
  return {*hi, *lo, std::clamp(mean, *lo, *hi), std_rate};
}

std::vector<double> ComputeCdf(std::span<const double> rates,
                               std::span<const double> grid) {
  if (rates.empty()) throw EmptyInputError("CDF needs at least one rate");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) {
      throw InvalidParameterError("CDF grid must be strictly ascending");
    }
  }
  std::vector<double> sorted(rates.begin(), rates.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<double> out;
  out.reserve(grid.size());
  for (double threshold : grid) {
    const auto below = std::lower_bound(sorted.begin(), sorted.end(), threshold);
    out.push_back(static_cast<double>(below - sorted.begin()) /
                  static_cast<double>(sorted.size()));
  }
  return out;
}

std::vector<double> DefaultCdfGrid(double upper, std::size_t points) {
  if (points < 2 || !(upper > 0.0)) {
    throw InvalidParameterError("CDF grid needs >= 2 points and a positive upper end");
  }
  std::vector<double> grid(points);
  for (std::size_t i = 0; i < points; ++i) {
    grid[i] = upper * static_cast<double>(i) / static_cast<double>(points - 1);
  }
  return grid;
}

}  // namespace sidelink
