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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "oracles.h"
#include "sidelink/errors.h"

namespace sidelink {
namespace {

using ::sidelink::testing::PermutationOptimum;
using ::sidelink::testing::RandomWeights;

constexpr double kTol = 1e-9;

TEST(SolveAssignmentTest, TwoByTwoPicksOffDiagonal) {
  const auto w = WeightMatrix::FromRows({{1, 2}, {3, 1}});
  const PerfectMatching m = SolveAssignment(w);
  EXPECT_EQ(m.assignment, (std::vector<std::size_t>{1, 0}));
  EXPECT_NEAR(m.value, 5.0, kTol);
}

TEST(SolveAssignmentTest, DiagonalDominance) {
  const auto m = SolveAssignment(WeightMatrix::FromRows({{10, 0}, {0, 10}}));
  EXPECT_EQ(m.assignment, (std::vector<std::size_t>{0, 1}));
  EXPECT_NEAR(m.value, 20.0, kTol);
}

TEST(SolveAssignmentTest, SingleVertex) {
  const auto m = SolveAssignment(WeightMatrix::FromRows({{3.3}}));
  EXPECT_EQ(m.assignment, (std::vector<std::size_t>{0}));
  EXPECT_DOUBLE_EQ(m.value, 3.3);
}

TEST(SolveAssignmentTest, AllZeroMatrix) {
  const auto m = SolveAssignment(WeightMatrix(4, 4));
  EXPECT_TRUE(ValidatePerfectMatching(m, 4).empty());
  EXPECT_EQ(m.value, 0.0);
}

TEST(SolveAssignmentTest, RejectsNonSquare) {
  EXPECT_THROW(SolveAssignment(WeightMatrix(2, 3)), DimensionError);
}

TEST(WeightMatrixTest, RejectsInvalidEntries) {
  EXPECT_THROW(WeightMatrix::FromRows({{1, -0.5}}), InvalidWeightError);
  EXPECT_THROW(WeightMatrix::FromRows({{std::nan("")}}), InvalidWeightError);
  EXPECT_THROW(WeightMatrix::FromRows({{std::numeric_limits<double>::infinity()}}),
               InvalidWeightError);
  EXPECT_THROW(WeightMatrix(0, 3), DimensionError);
  WeightMatrix w(2, 2);
  EXPECT_THROW(w.set(0, 0, -1.0), InvalidWeightError);
  EXPECT_THROW(w.set(2, 0, 1.0), BoundsError);
}

TEST(BruteForceAssignmentTest, MatchesWorkedExample) {
  const auto m = BruteForceAssignment(WeightMatrix::FromRows({{1, 2}, {3, 1}}));
  EXPECT_EQ(m.assignment, (std::vector<std::size_t>{1, 0}));
  EXPECT_DOUBLE_EQ(m.value, 5.0);
}

TEST(BruteForceAssignmentTest, SingletonAndLexicographicTie) {
  EXPECT_DOUBLE_EQ(BruteForceAssignment(WeightMatrix::FromRows({{7.25}})).value, 7.25);
  const auto ones = BruteForceAssignment(
      WeightMatrix::FromRows({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}));
  EXPECT_EQ(ones.assignment, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_DOUBLE_EQ(ones.value, 3.0);
}

TEST(BruteForceAssignmentTest, SizeGuard) {
  EXPECT_THROW(BruteForceAssignment(WeightMatrix(11, 11)), SizeLimitError);
}

TEST(MatchingValueTest, Sums) {
  const auto w = WeightMatrix::FromRows({{1, 2}, {3, 1}});
  EXPECT_DOUBLE_EQ(MatchingValue(w, std::vector<std::size_t>{1, 0}), 5.0);
  const auto big = WeightMatrix::FromRows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
  EXPECT_DOUBLE_EQ(MatchingValue(big, std::vector<std::size_t>{0, 1, 2}), 15.0);
  EXPECT_DOUBLE_EQ(MatchingValue(WeightMatrix(2, 2), std::vector<std::size_t>{1, 0}),
                   0.0);
  EXPECT_THROW(MatchingValue(w, std::vector<std::size_t>{0, 2}), BoundsError);
}

TEST(ValidatePerfectMatchingTest, ReportsViolations) {
  EXPECT_TRUE(ValidatePerfectMatching({{0, 1}, 0.0}, 2).empty());
  const auto dup = ValidatePerfectMatching({{0, 0}, 0.0}, 2);
  ASSERT_EQ(dup.size(), 1u);
  EXPECT_EQ(dup[0], "duplicate column 0");
  const auto short_one = ValidatePerfectMatching({{0}, 0.0}, 2);
  ASSERT_EQ(short_one.size(), 1u);
  EXPECT_EQ(short_one[0].rfind("length mismatch", 0), 0u);
  const auto out_of_range = ValidatePerfectMatching({{0, 5}, 0.0}, 2);
  ASSERT_EQ(out_of_range.size(), 1u);
  EXPECT_NE(out_of_range[0].find("out of range"), std::string::npos);
}

// Both the library brute force and the recursive test oracle must agree
// with Kuhn-Munkres.
TEST(SolveAssignmentProperty, AgreesWithOracles) {
  std::mt19937_64 gen(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + trial % 7;
    const WeightMatrix w = RandomWeights(gen, n, n);
    const PerfectMatching m = SolveAssignment(w);
    ASSERT_TRUE(ValidatePerfectMatching(m, n).empty());
    EXPECT_NEAR(m.value, MatchingValue(w, m), kTol);
    EXPECT_NEAR(m.value, BruteForceAssignment(w).value, kTol) << "trial " << trial;
    EXPECT_NEAR(m.value, PermutationOptimum(w), kTol) << "trial " << trial;
  }
}

TEST(SolveAssignmentProperty, IntegerWeightsWithTies) {
  std::mt19937_64 gen(99);
  std::uniform_int_distribution<int> small(0, 3);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 6;
    WeightMatrix w(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) w.set(i, j, small(gen));
    EXPECT_NEAR(SolveAssignment(w).value, PermutationOptimum(w), kTol);
  }
}

TEST(SolveAssignmentProperty, ScaleInvariantArgmax) {
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 6;
    const WeightMatrix w = RandomWeights(gen, n, n);
    const PerfectMatching base = SolveAssignment(w);
    for (double lambda : {0.25, 3.0, 1000.0}) {
      const PerfectMatching scaled = SolveAssignment(w.scaled(lambda));
      // Continuous random weights have a unique optimum almost surely.
      EXPECT_EQ(scaled.assignment, base.assignment);
      EXPECT_NEAR(scaled.value, lambda * base.value, 1e-9 * lambda * (1 + base.value));
    }
  }
}

TEST(SolveAssignmentProperty, RaisingSelectedEntryNeverLowersOptimum) {
  std::mt19937_64 gen(17);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 7;
    WeightMatrix w = RandomWeights(gen, n, n);
    const PerfectMatching before = SolveAssignment(w);
    const std::size_t row = trial % n;
    const std::size_t col = before.assignment[row];
    w.set(row, col, w(row, col) + 1.5);
    EXPECT_GE(SolveAssignment(w).value, before.value - kTol);
  }
}

TEST(SolveAssignmentTest, LargeInstanceIsPermutation) {
  std::mt19937_64 gen(3);
  const WeightMatrix w = RandomWeights(gen, 150, 150);
  const PerfectMatching m = SolveAssignment(w);
  EXPECT_TRUE(ValidatePerfectMatching(m, 150).empty());
}

}  // namespace
}  // namespace sidelink
