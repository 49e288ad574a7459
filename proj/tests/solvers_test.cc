// Copyright 2026 The Authors.
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

#include "mcms/solvers.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "mcms/harness.h"
#include "test_util.h"

namespace mcms {
namespace {

using ::mcms::testutil::GapInstance;
using ::mcms::testutil::MakeInstance;
using ::testing::ElementsAre;
using ::testing::HasSubstr;
using ::testing::IsEmpty;

TEST(ApproximationRatioTest, MatchesOneMinusInverseE) {
  EXPECT_DOUBLE_EQ(kGreedyApproximationRatio, 1.0 - std::exp(-1.0));
  EXPECT_TRUE(MeetsApproximationBound(6, 7));
  EXPECT_TRUE(MeetsApproximationBound(0, 0));
  EXPECT_FALSE(MeetsApproximationBound(1, 2));
  EXPECT_TRUE(MeetsApproximationBound(2, 3));
}

TEST(SolveGreedyTest, SingleCellTakesLargestSet) {
  absl::StatusOr<SolveResult> r = SolveGreedy(MakeInstance(3, {{{0}, {0, 1}, {2}}}));
  ASSERT_TRUE(r.ok());
  EXPECT_THAT(r->alloc.chosen, ElementsAre(1));
  EXPECT_EQ(r->objective, 2);
  EXPECT_THAT(r->per_step_marginals, ElementsAre(2));
}

TEST(SolveGreedyTest, GapInstance) {
  absl::StatusOr<SolveResult> r = SolveGreedy(GapInstance());
  ASSERT_TRUE(r.ok());
  EXPECT_THAT(r->alloc.chosen, ElementsAre(1, 0));
  EXPECT_EQ(r->objective, 6);
  EXPECT_THAT(r->per_step_marginals, ElementsAre(5, 1));
  EXPECT_EQ(r->mode, ServiceMode::kMultiConnectivity);
}

TEST(SolveGreedyTest, TiesGoToLowestCellThenPrb) {
  // Every set has one new user; the first pick must be cell 0, PRB 0.
  const CoverageInstance instance =
      MakeInstance(4, {{{0}, {1}}, {{2}, {3}}});
  absl::StatusOr<SolveResult> r = SolveGreedy(instance);
  ASSERT_TRUE(r.ok());
  EXPECT_THAT(r->alloc.chosen, ElementsAre(0, 0));
}

TEST(SolveGreedyTest, ZeroGainStepsStillAllocate) {
  const CoverageInstance instance =
      MakeInstance(2, {{{}, {}}, {{0, 1}, {0}}, {{}, {1}}});
  absl::StatusOr<SolveResult> r = SolveGreedy(instance);
  ASSERT_TRUE(r.ok());
  EXPECT_THAT(r->alloc.chosen, ElementsAre(0, 0, 0));
  EXPECT_THAT(r->per_step_marginals, ElementsAre(2, 0, 0));
  EXPECT_TRUE(ValidateAllocation(instance, r->alloc).ok());
}

TEST(SolveGreedyTest, DisjointSetsMatchExact) {
  const CoverageInstance instance = MakeInstance(
      9, {{{0}, {1, 2}}, {{3, 4, 5}, {6}}, {{7}, {8}}});
  EXPECT_EQ(SolveGreedy(instance)->objective, SolveExact(instance)->objective);
  EXPECT_EQ(SolveGreedy(instance)->objective, 6);
}

TEST(SolveGreedyTest, RejectsInvalidInstance) {
  EXPECT_FALSE(SolveGreedy(MakeInstance(1, {{{3}}})).ok());
}

TEST(SolveExactTest, GapInstance) {
  const CoverageInstance instance = GapInstance();
  ASSERT_EQ(testutil::BruteForceOptimum(instance), 7);
  absl::StatusOr<SolveResult> r = SolveExact(instance);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r->objective, 7);
  EXPECT_THAT(r->alloc.chosen, ElementsAre(0, 1));
  EXPECT_THAT(r->per_step_marginals, IsEmpty());
}

TEST(SolveExactTest, SingleCellMatchesGreedy) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const CoverageInstance instance =
        RandomCoverageInstance(rng, {.max_cells = 1, .max_prbs = 6});
    const SolveResult exact = *SolveExact(instance);
    const SolveResult greedy = *SolveGreedy(instance);
    EXPECT_EQ(exact.alloc, greedy.alloc);
    EXPECT_EQ(exact.objective, greedy.objective);
  }
}

TEST(SolveExactTest, SinglePrbIsForced) {
  const CoverageInstance instance =
      MakeInstance(5, {{{0, 1}}, {{1, 2}}, {{4}}});
  absl::StatusOr<SolveResult> r = SolveExact(instance);
  ASSERT_TRUE(r.ok());
  EXPECT_THAT(r->alloc.chosen, ElementsAre(0, 0, 0));
  EXPECT_EQ(r->objective, 4);
}

TEST(SolveExactTest, LexicographicTieBreak) {
  // Every allocation covers both users.
  const CoverageInstance instance =
      MakeInstance(2, {{{0, 1}, {0, 1}}, {{0, 1}, {0, 1}}});
  EXPECT_THAT(SolveExact(instance)->alloc.chosen, ElementsAre(0, 0));
  // [0, 0] already covers both users.
  const CoverageInstance second =
      MakeInstance(2, {{{0}, {0, 1}}, {{1}, {1}}});
  EXPECT_THAT(SolveExact(second)->alloc.chosen, ElementsAre(0, 0));
  const CoverageInstance third =
      MakeInstance(3, {{{0}, {0, 1}}, {{0}, {2}}});
  EXPECT_THAT(SolveExact(third)->alloc.chosen, ElementsAre(1, 1));
}

TEST(SolveExactTest, BudgetExceeded) {
  std::vector<std::vector<UserSet>> sets(8, std::vector<UserSet>(10));
  // Full coverage at the first allocation ends the search immediately.
  sets[0][0] = {0};
  const CoverageInstance instance = MakeInstance(1, sets);
  absl::StatusOr<SolveResult> r = SolveExact(instance);
  EXPECT_EQ(r.status().code(), absl::StatusCode::kResourceExhausted);
  EXPECT_THAT(r.status().message(), HasSubstr("10^8 = 100000000"));
  EXPECT_TRUE(SolveExact(instance, 100'000'000).ok());
  EXPECT_FALSE(SolveExact(GapInstance(), 3).ok());
}

TEST(SolveScBaselineTest, PicksBestPrbForOwnUsers) {
  absl::StatusOr<SolveResult> r =
      SolveScBaseline(MakeInstance(2, {{{0}, {0, 1}}}));
  ASSERT_TRUE(r.ok());
  EXPECT_THAT(r->alloc.chosen, ElementsAre(1));
  EXPECT_EQ(r->objective, 2);
  EXPECT_EQ(r->mode, ServiceMode::kSingleConnectivity);
}

TEST(SolveScBaselineTest, ForeignCoverageDoesNotCount) {
  // User 1 belongs to cell 1 but only cell 0 reaches it.
  const CoverageInstance instance =
      MakeInstance(2, {{{0, 1}, {1}}, {{0}, {}}}, {0, 1});
  absl::StatusOr<SolveResult> r = SolveScBaseline(instance);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r->objective, 1);
  EXPECT_THAT(r->alloc.chosen, ElementsAre(0, 0));
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      const UserSet sc = *ServedSc(instance, Allocation{{a, b}});
      EXPECT_FALSE(std::binary_search(sc.begin(), sc.end(), 1));
    }
  }
}

TEST(SolveScBaselineTest, IsScOptimalAndBelowMcOptimum) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const CoverageInstance instance = RandomCoverageInstance(rng, {});
    const SolveResult sc = *SolveScBaseline(instance);
    EXPECT_EQ(sc.objective,
              *Objective(instance, sc.alloc, ServiceMode::kSingleConnectivity));
    // Brute-force SC optimum.
    int best_sc = 0;
    std::vector<int> alloc(instance.num_cells, 0);
    auto recurse = [&](auto& self, int cell) -> void {
      if (cell == instance.num_cells) {
        best_sc = std::max(best_sc, *Objective(instance, Allocation{alloc},
                                               ServiceMode::kSingleConnectivity));
        return;
      }
      for (int j = 0; j < instance.prbs_per_cell; ++j) {
        alloc[cell] = j;
        self(self, cell + 1);
      }
    };
    recurse(recurse, 0);
    EXPECT_EQ(sc.objective, best_sc);
    EXPECT_LE(sc.objective, testutil::BruteForceOptimum(instance));
  }
}

TEST(SolveMcpGreedyTest, PicksLargestSet) {
  McpInstance mcp{{0, 1, 2, 3}, {{0, 1}, {2}, {3}, {0, 2, 3}}, 1};
  absl::StatusOr<McpResult> r = SolveMcpGreedy(mcp);
  ASSERT_TRUE(r.ok());
  EXPECT_THAT(r->chosen, ElementsAre(3));
  EXPECT_EQ(r->covered, 3);
}

TEST(SolveMcpGreedyTest, SlackBudgetCoversUnion) {
  McpInstance mcp{{0, 1, 2, 3, 4}, {{0, 1}, {2}, {1, 2}, {0}}, 10};
  absl::StatusOr<McpResult> r = SolveMcpGreedy(mcp);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r->covered, 3);
  // Stops once nothing new can be covered.
  EXPECT_THAT(r->chosen, ElementsAre(0, 1));
}

TEST(SolveMcpGreedyTest, ZeroBudget) {
  McpInstance mcp{{0, 1}, {{0, 1}}, 0};
  EXPECT_EQ(SolveMcpGreedy(mcp)->covered, 0);
}

TEST(SolveMcpGreedyTest, RejectsInvalid) {
  EXPECT_FALSE(SolveMcpGreedy(McpInstance{{0, 1}, {{2}}, 1}).ok());
  EXPECT_FALSE(SolveMcpGreedy(McpInstance{{0, 1}, {{0}}, -1}).ok());
  EXPECT_FALSE(SolveMcpGreedy(McpInstance{{1, 0}, {{0}}, 1}).ok());
}

TEST(SolveMcpGreedyTest, MeetsBoundAgainstEnumeration) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const McpInstance mcp = testutil::RandomMcpInstance(rng);
    const McpResult r = *SolveMcpGreedy(mcp);
    const int optimum = testutil::BruteForceMcpOptimum(mcp);
    EXPECT_LE(r.covered, optimum);
    EXPECT_TRUE(MeetsApproximationBound(r.covered, optimum))
        << r.covered << " vs " << optimum;
    EXPECT_LE(static_cast<int>(r.chosen.size()), mcp.budget);
  }
}

class SolverPropertyTest : public ::testing::Test {
 protected:
  std::mt19937_64 rng_{424242};
};

TEST_F(SolverPropertyTest, ExactMatchesIndependentEnumeration) {
  for (int i = 0; i < 300; ++i) {
    const CoverageInstance instance = RandomCoverageInstance(rng_, {});
    const SolveResult exact = *SolveExact(instance);
    EXPECT_EQ(exact.objective, testutil::BruteForceOptimum(instance));
    EXPECT_EQ(exact.objective, testutil::UnionSize(instance, exact.alloc.chosen));
  }
}

TEST_F(SolverPropertyTest, GreedyRespectsPartitionConstraint) {
  for (int i = 0; i < 300; ++i) {
    const CoverageInstance instance = RandomCoverageInstance(rng_, {});
    const SolveResult greedy = *SolveGreedy(instance);
    EXPECT_TRUE(ValidateAllocation(instance, greedy.alloc).ok());
    ASSERT_EQ(static_cast<int>(greedy.per_step_marginals.size()),
              instance.num_cells);
    EXPECT_EQ(std::accumulate(greedy.per_step_marginals.begin(),
                              greedy.per_step_marginals.end(), 0),
              greedy.objective);
    EXPECT_EQ(greedy.objective,
              *Objective(instance, greedy.alloc,
                         ServiceMode::kMultiConnectivity));
  }
}

TEST_F(SolverPropertyTest, GreedyMarginalsNonIncreasing) {
  for (int i = 0; i < 300; ++i) {
    const SolveResult greedy =
        *SolveGreedy(RandomCoverageInstance(rng_, {.max_cells = 7}));
    EXPECT_TRUE(std::is_sorted(greedy.per_step_marginals.rbegin(),
                               greedy.per_step_marginals.rend()));
  }
}

TEST_F(SolverPropertyTest, OrderingExactGreedySingleSet) {
  for (int i = 0; i < 300; ++i) {
    const CoverageInstance instance = RandomCoverageInstance(rng_, {});
    const int exact = SolveExact(instance)->objective;
    const int greedy = SolveGreedy(instance)->objective;
    size_t largest = 0;
    for (const auto& cell : instance.collections) {
      for (const UserSet& users : cell) largest = std::max(largest, users.size());
    }
    EXPECT_GE(exact, greedy);
    EXPECT_GE(greedy, static_cast<int>(largest));
    // The guarantee that holds on every instance; the (1-1/e) ratio is
    // checked statistically by the acceptance suite.
    EXPECT_GE(2 * greedy, exact);
  }
}

TEST(GreedyTest, WorstCaseFallsBelowOneMinusInverseE) {
  const CoverageInstance instance = testutil::WorstCaseInstance();
  const SolveResult greedy = *SolveGreedy(instance);
  const SolveResult exact = *SolveExact(instance);
  EXPECT_EQ(greedy.objective, 6);
  EXPECT_EQ(exact.objective, 10);
  EXPECT_EQ(testutil::BruteForceOptimum(instance), 10);
  EXPECT_FALSE(MeetsApproximationBound(greedy.objective, exact.objective));
}

TEST_F(SolverPropertyTest, Deterministic) {
  for (int i = 0; i < 50; ++i) {
    const CoverageInstance instance = RandomCoverageInstance(rng_, {});
    EXPECT_EQ(*SolveGreedy(instance), *SolveGreedy(instance));
    EXPECT_EQ(*SolveExact(instance), *SolveExact(instance));
    EXPECT_EQ(*SolveScBaseline(instance), *SolveScBaseline(instance));
  }
}

}  // namespace
}  // namespace mcms
