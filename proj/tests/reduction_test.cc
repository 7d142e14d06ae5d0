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

#include "sidelink/reduction.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.h"
#include "sidelink/constraint_matrix.h"
#include "sidelink/errors.h"

namespace sidelink {
namespace {

using ::sidelink::testing::FullEnumerationOptimum;
using ::sidelink::testing::RandomWeights;

constexpr double kTol = 1e-9;

WeightMatrix Worked() { return WeightMatrix::FromRows({{5, 1, 2, 3}, {4, 4, 1, 0}}); }

TEST(PartitionTest, BlockLayout) {
  const MacroPartition p = BuildPartition(2, 2);
  EXPECT_EQ(p.resources(), 4u);
  EXPECT_EQ(p.block_begin(0), 0u);
  EXPECT_EQ(p.block_end(0), 2u);
  EXPECT_EQ(p.block_begin(1), 2u);
  EXPECT_EQ(p.block_end(1), 4u);
  for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(p.subframe_of(j), j / 2);

  const MacroPartition single = BuildPartition(1, 5);
  EXPECT_EQ(single.block_begin(0), 0u);
  EXPECT_EQ(single.block_end(0), 5u);

  const MacroPartition table = BuildPartition(6, 7);
  EXPECT_EQ(table.resources(), 42u);
  std::vector<int> members(6, 0);
  for (std::size_t j = 0; j < table.resources(); ++j) ++members[table.subframe_of(j)];
  for (int count : members) EXPECT_EQ(count, 7);
}

TEST(PartitionTest, RejectsZeroCounts) {
  EXPECT_THROW(BuildPartition(0, 3), InvalidParameterError);
  EXPECT_THROW(BuildPartition(3, 0), InvalidParameterError);
}

TEST(ReduceHardTest, WorkedInstance) {
  const ReducedProblem rp = ReduceHard(Worked(), BuildPartition(2, 2));
  EXPECT_EQ(rp.reduced, WeightMatrix::FromRows({{5, 3}, {4, 1}}));
  EXPECT_EQ(rp.witness, (std::vector<std::size_t>{0, 3, 0, 2}));
}

TEST(ReduceHardTest, KOneIsIdentity) {
  std::mt19937_64 gen(1);
  const WeightMatrix w = RandomWeights(gen, 4, 4);
  const ReducedProblem rp = ReduceHard(w, BuildPartition(4, 1));
  EXPECT_EQ(rp.reduced, w);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t s = 0; s < 4; ++s) EXPECT_EQ(rp.witness_at(i, s), s);
}

TEST(ReduceHardTest, AllZeroPicksLowestIndex) {
  const ReducedProblem rp = ReduceHard(WeightMatrix(3, 9), BuildPartition(3, 3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t s = 0; s < 3; ++s) {
      EXPECT_EQ(rp.reduced(i, s), 0.0);
      EXPECT_EQ(rp.witness_at(i, s), 3 * s);
    }
}

TEST(ReduceHardTest, DimensionMismatch) {
  EXPECT_THROW(ReduceHard(WeightMatrix(2, 5), BuildPartition(2, 2)), DimensionError);
  EXPECT_THROW(ReduceHard(WeightMatrix(3, 4), BuildPartition(2, 2)), DimensionError);
}

TEST(ReduceSoftTest, ClosedFormForEqualValues) {
  const auto w = WeightMatrix::FromRows({{2, 2}});
  for (double beta : {0.5, 1.0, 10.0, 1e3}) {
    EXPECT_NEAR(ReduceSoft(w, BuildPartition(1, 2), beta)(0, 0),
                2.0 + std::log(2.0) / beta, 1e-12);
  }
}

TEST(ReduceSoftTest, LargeBetaApproachesMax) {
  const auto w = WeightMatrix::FromRows({{5, 1}});
  const double soft = ReduceSoft(w, BuildPartition(1, 2), 1000.0)(0, 0);
  EXPECT_NEAR(soft, 5.0, 1e-9);
  EXPECT_NEAR(soft, ReduceHard(w, BuildPartition(1, 2)).reduced(0, 0), 1e-9);
}

TEST(ReduceSoftTest, KOneIsExact) {
  std::mt19937_64 gen(8);
  const WeightMatrix w = RandomWeights(gen, 3, 3);
  for (double beta : {1e-3, 1.0, 1e6}) {
    EXPECT_EQ(ReduceSoft(w, BuildPartition(3, 1), beta), w);
  }
}

TEST(ReduceSoftTest, HugeBetaDoesNotOverflow) {
  const auto w = WeightMatrix::FromRows({{900, 1000, 950, 10}, {1, 2, 3, 4}});
  const WeightMatrix soft = ReduceSoft(w, BuildPartition(2, 2), 1e300);
  EXPECT_EQ(soft(0, 0), 1000.0);
  EXPECT_EQ(soft(0, 1), 950.0);
}

TEST(ReduceSoftTest, RejectsBadBetaAndReportsOverflow) {
  const auto w = WeightMatrix::FromRows({{1, 2}});
  EXPECT_THROW(ReduceSoft(w, BuildPartition(1, 2), 0.0), InvalidParameterError);
  EXPECT_THROW(ReduceSoft(w, BuildPartition(1, 2), -1.0), InvalidParameterError);
  EXPECT_THROW(ReduceSoft(w, BuildPartition(1, 2), std::nan("")), InvalidParameterError);
  // ln(2) / 1e-320 is not representable.
  EXPECT_THROW(ReduceSoft(w, BuildPartition(1, 2), 1e-320), NumericError);
}

TEST(SolveConstrainedTest, WorkedInstance) {
  const ResourceAssignment a = SolveConstrained(Worked(), BuildPartition(2, 2));
  EXPECT_EQ(a.vehicle_to_resource, (std::vector<std::size_t>{3, 0}));
  EXPECT_EQ(a.subframe_of, (std::vector<std::size_t>{1, 0}));
  EXPECT_DOUBLE_EQ(a.value, 7.0);
}

TEST(SolveConstrainedTest, SingleVehicleTakesBlockMax) {
  const ResourceAssignment a =
      SolveConstrained(WeightMatrix::FromRows({{1, 9, 4}}), BuildPartition(1, 3));
  EXPECT_EQ(a.vehicle_to_resource, (std::vector<std::size_t>{1}));
  EXPECT_DOUBLE_EQ(a.value, 9.0);
}

TEST(SolveConstrainedTest, KOneMatchesUnconstrained) {
  std::mt19937_64 gen(12);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 8;
    const WeightMatrix w = RandomWeights(gen, n, n);
    const ResourceAssignment a = SolveConstrained(w, BuildPartition(n, 1));
    EXPECT_NEAR(a.value, SolveAssignment(w).value, kTol);
  }
}

TEST(ExpandMatchingTest, FollowsWitness) {
  const WeightMatrix w = Worked();
  const ReducedProblem rp = ReduceHard(w, BuildPartition(2, 2));
  const ResourceAssignment a = ExpandMatching({{1, 0}, 7.0}, rp, w);
  EXPECT_EQ(a.vehicle_to_resource, (std::vector<std::size_t>{3, 0}));
  EXPECT_DOUBLE_EQ(a.value, 7.0);
}

TEST(ExpandMatchingTest, KOneResourceEqualsSubframe) {
  std::mt19937_64 gen(2);
  const WeightMatrix w = RandomWeights(gen, 3, 3);
  const ReducedProblem rp = ReduceHard(w, BuildPartition(3, 1));
  const ResourceAssignment a = ExpandMatching({{2, 0, 1}, 0.0}, rp, w);
  EXPECT_EQ(a.vehicle_to_resource, (std::vector<std::size_t>{2, 0, 1}));
}

TEST(ExpandMatchingTest, BlockDiagonalStaysHome) {
  // Vehicle i is strong only in subframe i; its best resource there is the
  // middle one.
  WeightMatrix w(3, 9);
  for (std::size_t i = 0; i < 3; ++i) {
    w.set(i, 3 * i, 5.0);
    w.set(i, 3 * i + 1, 8.0);
  }
  const ReducedProblem rp = ReduceHard(w, BuildPartition(3, 3));
  const ResourceAssignment a = ExpandMatching({{0, 1, 2}, 0.0}, rp, w);
  EXPECT_EQ(a.vehicle_to_resource, (std::vector<std::size_t>{1, 4, 7}));
  EXPECT_DOUBLE_EQ(a.value, 24.0);
}

TEST(ExpandMatchingTest, DetectsCorruptWitness) {
  const WeightMatrix w = Worked();
  ReducedProblem rp = ReduceHard(w, BuildPartition(2, 2));
  rp.witness[1] = 0;  // vehicle 0 / subframe 1 now points into subframe 0
  EXPECT_THROW(ExpandMatching({{1, 0}, 0.0}, rp, w), InternalInvariantError);

  ReducedProblem wrong_value = ReduceHard(w, BuildPartition(2, 2));
  wrong_value.witness[1] = 2;  // in the right block but not the maximum
  EXPECT_THROW(ExpandMatching({{1, 0}, 0.0}, wrong_value, w), InternalInvariantError);

  const ReducedProblem ok = ReduceHard(w, BuildPartition(2, 2));
  EXPECT_THROW(ExpandMatching({{0, 0}, 0.0}, ok, w), BoundsError);
  EXPECT_THROW(ExpandMatching({{0}, 0.0}, ok, w), BoundsError);
}

// The central claim: the macro-vertex reduction loses nothing against an
// enumeration of every conflict-free vehicle -> resource map.
TEST(ReductionProperty, OptimalAgainstFullEnumeration) {
  std::mt19937_64 gen(77);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 2 + trial % 4;  // 2..5
    const std::size_t k = 1 + (trial / 4) % 3;
    if (n == 5 && k == 3) continue;  // 15^5 maps, covered by exhaustive tests
    const MacroPartition p(n, k);
    const WeightMatrix w = RandomWeights(gen, n, n * k);
    const ResourceAssignment a = SolveConstrained(w, p);
    EXPECT_NEAR(a.value, FullEnumerationOptimum(w, p).value, kTol)
        << "n=" << n << " k=" << k;
  }
}

TEST(ReductionProperty, SoftBoundAndConsistency) {
  std::mt19937_64 gen(31);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const std::size_t k = 1 + trial % 7;
    const MacroPartition p(n, k);
    const WeightMatrix w = RandomWeights(gen, n, n * k);
    const ReducedProblem hard = ReduceHard(w, p);
    for (double beta : {0.1, 10.0, 1e4}) {
      const WeightMatrix soft = ReduceSoft(w, p, beta);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t s = 0; s < n; ++s) {
          const double gap = soft(i, s) - hard.reduced(i, s);
          EXPECT_GE(gap, 0.0);
          EXPECT_LE(gap, std::log(static_cast<double>(k)) / beta + 1e-12);
        }
    }
    // Expansion keeps the reduced matching value and yields a feasible map.
    const PerfectMatching reduced = SolveAssignment(hard.reduced);
    const ResourceAssignment expanded = ExpandMatching(reduced, hard, w);
    EXPECT_EQ(expanded.value, reduced.value);
    EXPECT_TRUE(VerifyAssignmentFeasibility(expanded, n, k).feasible);
  }
}

TEST(ReductionProperty, ZeroProductIdentity) {
  std::mt19937_64 gen(4);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const std::size_t k = 1 + trial % 4;
    const MacroPartition p(n, k);
    const WeightMatrix w = RandomWeights(gen, n, n * k);
    const ResourceAssignment a = SolveConstrained(w, p);
    std::vector<int> x(n * n * k, 0);
    for (std::size_t i = 0; i < n; ++i) x[i * n * k + a.vehicle_to_resource[i]] = 1;
    double cross = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t s = 0; s < n; ++s)
        for (std::size_t j = p.block_begin(s); j < p.block_end(s); ++j)
          for (std::size_t l = p.block_begin(s); l < p.block_end(s); ++l)
            if (j != l) cross += w(i, j) * x[i * n * k + j] * x[i * n * k + l];
    EXPECT_EQ(cross, 0.0);
  }
}

}  // namespace
}  // namespace sidelink
