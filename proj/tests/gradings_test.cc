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


#include "oddmtc/gradings.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "oddmtc/exactmath.h"

namespace oddmtc {
namespace {

GradingCase make_case(int64_t rank, std::vector<int64_t> ranks) {
  GradingCase c;
  c.rank = rank;
  c.invertibles = static_cast<int64_t>(ranks.size());
  c.component_ranks = std::move(ranks);
  return c;
}

std::vector<int64_t> with_ones(std::vector<int64_t> head, int ones) {
  head.insert(head.end(), ones, 1);
  return head;
}

std::vector<std::vector<int64_t>> shapes(const std::vector<GradingCase>& cases) {
  std::vector<std::vector<int64_t>> out;
  for (const GradingCase& c : cases) out.push_back(c.component_ranks);
  return out;
}

TEST(InvertibleCountCandidates, Examples) {
  EXPECT_EQ(invertible_count_candidates(25), (std::vector<int64_t>{1, 3, 5, 9, 17, 25}));
  EXPECT_EQ(invertible_count_candidates(29), (std::vector<int64_t>{1, 3, 5, 7, 13, 21, 29}));
  EXPECT_EQ(invertible_count_candidates(1), (std::vector<int64_t>{1}));
  EXPECT_THROW(invertible_count_candidates(24), InputError);
}

TEST(EnumerateCases, Rank33ThreeInvertibles) {
  EXPECT_EQ(shapes(enumerate_cases(33, 3)),
            (std::vector<std::vector<int64_t>>{{27, 3, 3}, {19, 11, 3}, {11, 11, 11}}));
}

TEST(EnumerateCases, Rank29FiveInvertibles) {
  EXPECT_EQ(shapes(enumerate_cases(29, 5)),
            (std::vector<std::vector<int64_t>>{
                {25, 1, 1, 1, 1}, {17, 9, 1, 1, 1}, {9, 9, 9, 1, 1}}));
}

TEST(EnumerateCases, SingleComponent) {
  EXPECT_EQ(shapes(enumerate_cases(31, 1)), (std::vector<std::vector<int64_t>>{{31}}));
}

TEST(EnumerateCases, Rank49SevenIncludesAllSevens) {
  std::vector<std::vector<int64_t>> s = shapes(enumerate_cases(49, 7));
  EXPECT_NE(std::find(s.begin(), s.end(), std::vector<int64_t>(7, 7)), s.end());
}

TEST(EnumerateCases, RejectsNonCandidate) { EXPECT_THROW(enumerate_cases(25, 7), InputError); }

TEST(MinThreeComponents, Examples) {
  EXPECT_TRUE(filter_min_three_components(make_case(25, with_ones({9}, 16))).discarded());
  EXPECT_EQ(filter_min_three_components(make_case(25, {19, 3, 3})).verdict, Verdict::kPass);
  EXPECT_EQ(filter_min_three_components(make_case(27, std::vector<int64_t>(9, 3))).verdict,
            Verdict::kPass);
}

TEST(Divisibility, Examples) {
  FilterVerdict v = filter_divisibility(make_case(25, {11, 11, 3}));
  EXPECT_TRUE(v.discarded());
  EXPECT_EQ(v.citation, kLemmaNotDivisible);
  EXPECT_TRUE(filter_divisibility(make_case(29, {11, 3, 3, 3, 3, 3, 3})).discarded());
  EXPECT_EQ(filter_divisibility(make_case(25, {19, 3, 3})).verdict, Verdict::kPass);
}

TEST(OddMultiplicity, Examples) {
  EXPECT_TRUE(filter_odd_multiplicity(make_case(47, with_ones({9, 9, 9, 9}, 11))).discarded());
  EXPECT_TRUE(filter_odd_multiplicity(make_case(49, with_ones({17, 9, 9, 9}, 5))).discarded());
  EXPECT_EQ(filter_odd_multiplicity(make_case(33, {27, 3, 3})).verdict, Verdict::kPass);
}

TEST(EqualRankComponents, Examples) {
  FilterVerdict v = filter_equal_rank_components(make_case(41, with_ones({17, 9, 9}, 6)), 3);
  EXPECT_TRUE(v.discarded());
  EXPECT_EQ(v.citation, kCorollaryThreeComponents);
  EXPECT_TRUE(
      filter_equal_rank_components(make_case(43, {19, 3, 3, 3, 3, 3, 3, 3, 3}), 3).discarded());
  EXPECT_EQ(filter_equal_rank_components(make_case(43, {19, 3, 3, 3, 3, 3, 3, 3, 3}), 9).verdict,
            Verdict::kPass);
  EXPECT_THROW(filter_equal_rank_components(make_case(25, {19, 3, 3}), 5), InputError);
}

TEST(InvertiblePlacement, AdjointOrders) {
  EXPECT_EQ(feasible_adjoint_orders(make_case(43, {19, 3, 3, 3, 3, 3, 3, 3, 3})),
            (std::vector<int64_t>{9}));
  EXPECT_EQ(feasible_adjoint_orders(make_case(25, {19, 3, 3})), (std::vector<int64_t>{3}));
  // C_ad would be pointed of rank 5 with every component of FPdim 5.
  EXPECT_TRUE(filter_invertible_placement(make_case(25, {5, 5, 5, 5, 5})).discarded());
}

TEST(ApplyGradingFilters, Rank33Survivor) {
  std::vector<std::vector<int64_t>> survivors;
  for (const GradingCase& c : enumerate_cases(33, 3)) {
    if (apply_grading_filters(c).survives()) survivors.push_back(c.component_ranks);
  }
  EXPECT_EQ(survivors, (std::vector<std::vector<int64_t>>{{27, 3, 3}}));
}

struct ProofCase {
  int64_t rank;
  int64_t invertibles;
  std::string verdict;
  std::string lemma;
  std::vector<int64_t> components;
};

std::vector<ProofCase> read_proof_cases() {
  std::ifstream in(std::string(ODDMTC_DATA_DIR) + "/proof_cases.csv");
  std::vector<ProofCase> out;
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::stringstream ss(line);
    ProofCase pc;
    std::string field;
    std::getline(ss, field, ',');
    pc.rank = std::stoll(field);
    std::getline(ss, field, ',');
    pc.invertibles = std::stoll(field);
    std::getline(ss, pc.verdict, ',');
    std::getline(ss, pc.lemma, ',');
    std::getline(ss, field);
    std::stringstream parts(field);
    for (int64_t r; parts >> r;) pc.components.push_back(r);
    out.push_back(std::move(pc));
  }
  return out;
}

const char* citation_of(const std::string& lemma) {
  if (lemma == "min_three") return kLemmaRankMoreThanOne;
  if (lemma == "divisibility") return kLemmaNotDivisible;
  return kLemmaOddComponents;
}

// The printed proofs list every case, then discard some with one of three
// lemmas; each must appear in the enumeration and be discarded with that
// lemma among the verdicts.
TEST(ProofCases, DiscardsCarryThePrintedLemma) {
  std::vector<ProofCase> cases = read_proof_cases();
  ASSERT_EQ(cases.size(), 207u);
  for (const ProofCase& pc : cases) {
    SCOPED_TRACE(std::to_string(pc.rank) + "/" + std::to_string(pc.invertibles));
    GradingCase c = make_case(pc.rank, pc.components);
    ASSERT_EQ(c.invertibles, pc.invertibles);
    std::vector<GradingCase> all = enumerate_cases(pc.rank, pc.invertibles);
    ASSERT_NE(std::find(all.begin(), all.end(), c), all.end()) << c.to_string();
    if (pc.verdict != "discard") continue;
    CaseVerdicts v = apply_grading_filters(c);
    bool cited = std::any_of(v.trail.begin(), v.trail.end(), [&](const auto& step) {
      return step.second.discarded() && step.second.citation == citation_of(pc.lemma);
    });
    EXPECT_TRUE(cited) << c.to_string() << " expected " << pc.lemma;
  }
}

// The three lemma filters never discard a case the proofs keep.
TEST(ProofCases, LemmaFiltersKeepPrintedSurvivors) {
  for (const ProofCase& pc : read_proof_cases()) {
    if (pc.verdict != "survives") continue;
    GradingCase c = make_case(pc.rank, pc.components);
    EXPECT_FALSE(filter_min_three_components(c).discarded()) << c.to_string();
    EXPECT_FALSE(filter_divisibility(c).discarded()) << c.to_string();
    EXPECT_FALSE(filter_odd_multiplicity(c).discarded()) << c.to_string();
  }
}

TEST(EnumerateCases, CanonicalOrderAndSums) {
  for (int64_t rank = 17; rank <= 49; rank += 2) {
    for (int64_t s : invertible_count_candidates(rank)) {
      std::vector<GradingCase> cases = enumerate_cases(rank, s);
      for (size_t i = 0; i < cases.size(); ++i) {
        const GradingCase& c = cases[i];
        EXPECT_NO_THROW(c.validate());
        int64_t sum = 0;
        for (int64_t r : c.component_ranks) sum += r;
        EXPECT_EQ(sum, rank);
        EXPECT_TRUE(std::is_sorted(c.component_ranks.rbegin(), c.component_ranks.rend()));
        if (i > 0) {
          EXPECT_GT(cases[i - 1].component_ranks, c.component_ranks);
        }
      }
    }
  }
}

}  // namespace
}  // namespace oddmtc
