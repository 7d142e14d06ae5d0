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

#include "sidelink/matching.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "sidelink/errors.h"

namespace sidelink {
namespace {

void RequireSquare(const WeightMatrix& weights, const char* who) {
  if (!weights.is_square()) {
    throw DimensionError(std::string(who) + " needs a square matrix, got " +
                         std::to_string(weights.rows()) + "x" +
                         std::to_string(weights.cols()));
  }
}

}  // namespace

PerfectMatching SolveAssignment(const WeightMatrix& weights) {
  RequireSquare(weights, "SolveAssignment");
  const std::size_t n = weights.rows();
  const double top = weights.max_entry();
  auto cost = [&](std::size_t i, std::size_t j) { return top - weights(i, j); };

  // Shortest augmenting paths with potentials. Index 0 of the column arrays
  // is a virtual column that roots each search; rows and columns are 1-based
  // in these arrays.
  constexpr double kInf = std::numeric_limits<double>::infinity();
  constexpr std::size_t kNone = 0;
  std::vector<double> row_pot(n + 1, 0.0), col_pot(n + 1, 0.0);
  std::vector<std::size_t> row_of_col(n + 1, kNone), prev_col(n + 1, 0);
  std::vector<double> min_slack(n + 1);
  std::vector<char> visited(n + 1);

  for (std::size_t row = 1; row <= n; ++row) {
    row_of_col[0] = row;
    std::size_t col = 0;
    std::fill(min_slack.begin(), min_slack.end(), kInf);
    std::fill(visited.begin(), visited.end(), 0);
    do {
      visited[col] = 1;
      const std::size_t i = row_of_col[col];
      double delta = kInf;
      std::size_t next = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (visited[j]) continue;
        const double slack = cost(i - 1, j - 1) - row_pot[i] - col_pot[j];
        if (slack < min_slack[j]) {
          min_slack[j] = slack;
          prev_col[j] = col;
        }
        if (min_slack[j] < delta) {
          delta = min_slack[j];
          next = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (visited[j]) {
          row_pot[row_of_col[j]] += delta;
          col_pot[j] -= delta;
        } else {
          min_slack[j] -= delta;
        }
      }
      col = next;
    } while (row_of_col[col] != kNone);
    // Flip the alternating path back to the root.
    do {
      const std::size_t back = prev_col[col];
      row_of_col[col] = row_of_col[back];
      col = back;
    } while (col != 0);
  }

  PerfectMatching result;
  result.assignment.assign(n, 0);
  for (std::size_t j = 1; j <= n; ++j) result.assignment[row_of_col[j] - 1] = j - 1;
  result.value = MatchingValue(weights, result.assignment);
  return result;
}

PerfectMatching BruteForceAssignment(const WeightMatrix& weights) {
  RequireSquare(weights, "BruteForceAssignment");
  const std::size_t n = weights.rows();
  if (n > kMaxBruteForceSize) {
    throw SizeLimitError("brute force limited to n <= " +
                         std::to_string(kMaxBruteForceSize) + ", got " +
                         std::to_string(n));
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  PerfectMatching best{perm, MatchingValue(weights, perm)};
  while (std::next_permutation(perm.begin(), perm.end())) {
    const double value = MatchingValue(weights, perm);
    if (value > best.value) best = {perm, value};
  }
  return best;
}

double MatchingValue(const WeightMatrix& weights,
                     const std::vector<std::size_t>& assignment) {
  if (assignment.size() > weights.rows()) {
    throw BoundsError("assignment has " + std::to_string(assignment.size()) +
                      " rows, matrix has " + std::to_string(weights.rows()));
  }
  double total = 0.0;
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    if (assignment[i] >= weights.cols()) {
      throw BoundsError("row " + std::to_string(i) + " matched to column " +
                        std::to_string(assignment[i]) + " outside " +
                        std::to_string(weights.cols()) + " columns");
    }
    total += weights(i, assignment[i]);
  }
  return total;
}

std::vector<std::string> ValidatePerfectMatching(const PerfectMatching& m,
                                                 std::size_t n) {
  std::vector<std::string> violations;
  if (m.assignment.size() != n) {
    violations.push_back("length mismatch: " +
                         std::to_string(m.assignment.size()) + " rows for n = " +
                         std::to_string(n));
  }
  std::vector<int> uses(n, 0);
  for (std::size_t i = 0; i < m.assignment.size(); ++i) {
    const std::size_t col = m.assignment[i];
    if (col >= n) {
      violations.push_back("row " + std::to_string(i) + " out of range: column " +
                           std::to_string(col));
    } else if (++uses[col] == 2) {
      violations.push_back("duplicate column " + std::to_string(col));
    }
  }
  return violations;
}

}  // namespace sidelink
