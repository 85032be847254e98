// Copyright 2026 The oddmtc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "oddmtc/dimsearch.h"

#include <gtest/gtest.h>

#include <algorithm>

namespace oddmtc {
namespace {

SearchParams basic(int64_t rank, int64_t s) {
  SearchParams p;
  p.rank = rank;
  p.invertibles = s;
  return p;
}

SearchParams adjoint(int64_t rank, int64_t g, int64_t ad_rank, int64_t ad_s) {
  SearchParams p;
  p.mode = Mode::kAdjoint;
  p.rank = rank;
  p.invertibles = g;
  p.adjoint_rank = ad_rank;
  p.adjoint_invertibles = ad_s;
  return p;
}

std::vector<BigInt> dims(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

bool contains(const std::vector<DimSolution>& rows, const BigInt& fpdim,
              const std::vector<BigInt>& d) {
  return std::any_of(rows.begin(), rows.end(),
                     [&](const DimSolution& s) { return s.fpdim == fpdim && s.dims == d; });
}

TEST(M1Candidates, BasicRank25) {
  EXPECT_EQ(m1_candidates(basic(25, 3)), (std::vector<int64_t>{9, 17}));
}

TEST(M1Candidates, EmptyRange) { EXPECT_TRUE(m1_candidates(basic(3, 1)).empty()); }

TEST(M1Candidates, AdjointRank35) {
  EXPECT_EQ(m1_candidates(adjoint(35, 3, 17, 3)), (std::vector<int64_t>{3, 11, 19, 27, 35, 43}));
}

TEST(M1Candidates, RespectsPredicates) {
  SearchParams p = basic(41, 5);
  p.min_m1 = 25;
  p.m1_square = true;
  for (int64_t m : m1_candidates(p)) {
    EXPECT_GE(m, 25);
    EXPECT_TRUE(isqrt_exact(m).is_perfect_square) << m;
  }
}

TEST(NextLevel, TwoChildren) {
  std::vector<LevelStep> steps = next_level({7, 1}, 3, 10, basic(25, 3));
  ASSERT_EQ(steps.size(), 2u);
  EXPECT_EQ(steps[0].u, 3);
  EXPECT_EQ(steps[0].c.num, 5);
  EXPECT_EQ(steps[0].c.den, 1);
  EXPECT_EQ(steps[1].u, 5);
  EXPECT_EQ(steps[1].c.num, 157);
  EXPECT_EQ(steps[1].c.den, 9);
}

TEST(NextLevel, UpperBoundBelowPrevious) {
  EXPECT_TRUE(next_level({7, 1}, 1, 1, basic(25, 3)).empty());
}

TEST(NextLevel, NonPositiveStateIsRejected) {
  EXPECT_THROW(next_level({0, 1}, 3, 2, basic(25, 3)), InputError);
}

TEST(Enumerate, Rank25ThreeInvertibles) {
  std::vector<DimSolution> rows = enumerate(basic(25, 3));
  EXPECT_EQ(rows.size(), 35u);
  EXPECT_TRUE(contains(rows, 441, dims({7, 7, 7, 3, 3, 3, 3, 3, 3, 3, 3})));
  EXPECT_TRUE(contains(rows, 18275625, dims({1425, 1425, 1425, 1425, 855, 475, 225, 75, 45, 19, 5})));
}

TEST(Enumerate, Rank17PerfectIsEmpty) { EXPECT_TRUE(enumerate(basic(17, 1)).empty()); }

TEST(Enumerate, Rank27MinM1Five) {
  SearchParams p = basic(27, 3);
  p.min_m1 = 5;
  std::vector<DimSolution> rows = enumerate(p);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].fpdim, 2475);
  EXPECT_EQ(rows[0].dims, dims({15, 15, 15, 15, 15, 5, 5, 5, 3, 3, 3, 3}));
}

TEST(Enumerate, Rank47FifteenInvertiblesIsEmpty) { EXPECT_TRUE(enumerate(basic(47, 15)).empty()); }

TEST(Enumerate, AdjointRank45) {
  std::vector<DimSolution> rows = enumerate(adjoint(45, 3, 15, 3));
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].fpdim, 9 * 25 * 13);
  EXPECT_EQ(rows[0].dims, dims({15, 15, 3, 3, 3, 3}));
  EXPECT_EQ(rows[1].fpdim, 9 * 37);
  EXPECT_EQ(rows[1].dims, dims({3, 3, 3, 3, 3, 3}));
}

TEST(Enumerate, ThreadCountDoesNotChangeOutput) {
  SearchParams p = basic(25, 3);
  std::vector<DimSolution> one = enumerate(p);
  p.jobs = 4;
  EXPECT_EQ(enumerate(p), one);
}

TEST(Enumerate, EveryRowSatisfiesInvariants) {
  SearchParams p = adjoint(43, 3, 25, 3);
  for (const DimSolution& s : enumerate(p)) EXPECT_EQ(invariant_violation(s, p), "");
}

TEST(Enumerate, BoundKeepsOnlySmallRows) {
  SearchParams p = basic(25, 3);
  p.fpdim_bound = BigInt(10000);
  std::vector<DimSolution> rows = enumerate(p);
  EXPECT_EQ(rows.size(), 7u);
  for (const DimSolution& s : rows) EXPECT_LE(s.fpdim, 10000);
}

TEST(Enumerate, NodeBudget) {
  SearchParams p = basic(25, 3);
  p.node_budget = 10000;
  EXPECT_THROW(enumerate(p), SearchBudgetExceeded);
  p.node_budget = 1000000000;
  EXPECT_EQ(enumerate(p).size(), 35u);
}

TEST(SearchParams, Validation) {
  EXPECT_THROW(basic(24, 3).validate(), InputError);
  EXPECT_THROW(basic(25, 4).validate(), InputError);
  EXPECT_THROW(basic(3, 3).validate(), InputError);
  EXPECT_THROW(adjoint(43, 9, 19, 5).validate(), InputError);
  SearchParams p = basic(25, 3);
  p.min_run = 0;
  EXPECT_THROW(p.validate(), InputError);
  p = basic(25, 3);
  p.fpdim_bound = BigInt(0);
  EXPECT_THROW(enumerate(p), InputError);
}

TEST(InvariantViolation, DetectsBrokenRow) {
  SearchParams p = basic(25, 3);
  DimSolution good = make_solution(441, 3, dims({7, 7, 7, 3, 3, 3, 3, 3, 3, 3, 3}));
  EXPECT_EQ(invariant_violation(good, p), "");
  DimSolution bad = good;
  bad.dims[0] = 9;
  EXPECT_NE(invariant_violation(bad, p), "");
  bad = good;
  std::swap(bad.dims[0], bad.dims[10]);
  EXPECT_NE(invariant_violation(bad, p), "");
}

TEST(CanonicalOrder, DescendingFpdimThenDims) {
  DimSolution a = make_solution(441, 3, dims({7, 7, 7, 3, 3, 3, 3, 3, 3, 3, 3}));
  DimSolution b = make_solution(2025, 3, dims({15, 15, 15, 15, 5, 5, 5, 3, 3, 3, 3}));
  EXPECT_TRUE(canonical_less(b, a));
  EXPECT_FALSE(canonical_less(a, b));
}

TEST(HasEqualRun, Lengths) {
  EXPECT_TRUE(has_equal_run(dims({9, 5, 5, 5, 3}), 3));
  EXPECT_FALSE(has_equal_run(dims({9, 5, 5, 3, 3}), 3));
  EXPECT_TRUE(has_equal_run(dims({9}), 1));
}

}  // namespace
}  // namespace oddmtc
