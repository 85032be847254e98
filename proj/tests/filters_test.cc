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


#include "oddmtc/filters.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "oddmtc/classify.h"
#include "oddmtc/goldens.h"

namespace oddmtc {
namespace {

std::vector<BigInt> dims(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

const GoldenTable& table1() {
  static const std::vector<GoldenTable> tables = load_goldens();
  return find_table(tables, "T1");
}

GradingCase case_19_3_3() { return GradingCase{25, 3, {19, 3, 3}}; }

LayerContext rank25_layer() {
  LayerContext layer;
  layer.kind = LayerKind::kWholeUniform;
  layer.grading = case_19_3_3();
  layer.group_order = 3;
  layer.adjoint_invertibles = 3;
  return layer;
}

AdjointPart part_of(int row) {
  std::optional<AdjointPart> p = adjoint_part(table1().printed_row(row), rank25_layer());
  EXPECT_TRUE(p.has_value());
  return *p;
}

TEST(FixedDimMultiplicity, Examples) {
  EXPECT_TRUE(fixed_dim_multiplicity_filter(table1().printed_row(1), 3).discarded());
  EXPECT_EQ(fixed_dim_multiplicity_filter(table1().printed_row(34), 3).verdict, Verdict::kPass);
  EXPECT_EQ(fixed_dim_multiplicity_filter(dims({15, 9, 3}), 3).verdict, Verdict::kPass);
}

TEST(DeequivProfiles, Row34) {
  AdjointPart part = part_of(34);
  EXPECT_EQ(part.dims, std::vector<BigInt>(8, 3));
  EXPECT_EQ(part.fpdim, 147);
  std::vector<DeequivProfile> profiles = deequiv_profiles(part.dims, 3, part.fpdim);
  std::set<BigInt> counts;
  for (const DeequivProfile& p : profiles) counts.insert(p.invertible_count);
  EXPECT_EQ(counts, (std::set<BigInt>{49, 31, 13}));
}

TEST(DeequivProfiles, DimNotDivisibleIsNeverFixed) {
  for (const DeequivProfile& p : deequiv_profiles(dims({5, 5, 5, 3}), 3, 3 * 59)) {
    EXPECT_EQ(std::count(p.fixed_dims.begin(), p.fixed_dims.end(), BigInt(5)), 0);
  }
}

TEST(DeequivProfiles, EmptyAdjointDims) {
  std::vector<DeequivProfile> profiles = deequiv_profiles({}, 3, 3);
  ASSERT_EQ(profiles.size(), 1u);
  EXPECT_EQ(profiles[0].invertible_count, 1);
}

TEST(DeequivProfiles, InputErrors) {
  EXPECT_THROW(deequiv_profiles(dims({3}), 9, 27), InputError);
  EXPECT_THROW(deequiv_profiles(dims({3}), 3, 19), InputError);
}

TEST(DeequivConsistency, Row26) {
  AdjointPart part = part_of(26);
  std::vector<DeequivProfile> profiles = deequiv_profiles(part.dims, 3, part.fpdim);
  ASSERT_EQ(profiles.size(), 1u);
  EXPECT_EQ(profiles[0].invertible_count, 13);
  EXPECT_EQ(profiles[0].deequiv_fpdim, 1089);
  EXPECT_TRUE(deequiv_consistency_filter(profiles[0]).discarded());
}

TEST(DeequivConsistency, Row34FullyFixed) {
  AdjointPart part = part_of(34);
  for (const DeequivProfile& p : deequiv_profiles(part.dims, 3, part.fpdim)) {
    if (p.invertible_count != 49) continue;
    EXPECT_EQ(p.deequiv_fpdim, 49);
    EXPECT_EQ(deequiv_consistency_filter(p).verdict, Verdict::kPass);
  }
}

TEST(DeequivConsistency, Row29) {
  AdjointPart part = part_of(29);
  for (const DeequivProfile& p : deequiv_profiles(part.dims, 3, part.fpdim)) {
    EXPECT_EQ(p.deequiv_fpdim, 4225);
    EXPECT_TRUE(deequiv_consistency_filter(p).discarded());
  }
}

TEST(OutsideDimUniformity, Examples) {
  EXPECT_TRUE(outside_dim_uniformity(table1().printed_row(35), case_19_3_3()).discarded());
  EXPECT_EQ(outside_dim_uniformity(table1().printed_row(34), case_19_3_3()).verdict,
            Verdict::kPass);
  DimSolution fake = make_solution(3 * 25 * 7, 3, dims({5}));
  EXPECT_TRUE(outside_dim_uniformity(fake, case_19_3_3()).discarded());
}

TEST(ComponentPacking, Examples) {
  DimSolution r27 = make_solution(2475, 3, dims({15, 15, 15, 15, 15, 5, 5, 5, 3, 3, 3, 3}));
  FilterVerdict v = component_packing_feasible(r27, GradingCase{27, 3, {9, 9, 9}});
  EXPECT_TRUE(v.discarded());
  EXPECT_EQ(v.citation, kPackingCitation);
  EXPECT_EQ(component_packing_feasible(table1().printed_row(34), case_19_3_3()).verdict,
            Verdict::kPass);
  EXPECT_EQ(component_packing_feasible(table1().printed_row(34), GradingCase{25, 1, {25}}).verdict,
            Verdict::kPass);
}

TEST(DualProduct, Examples) {
  EXPECT_TRUE(dual_product_feasible(dims({5, 5, 5, 5, 5, 15, 45, 81, 135}), 5).discarded());
  EXPECT_TRUE(dual_product_feasible(dims({7, 21, 33}), 7).discarded());
  // 9 = 1 + 2N * 3 has no solution.
  EXPECT_TRUE(dual_product_feasible(dims({3}), 3).discarded());
  // 49 = 1 + 2(3 + 3 + 3 + 3 + 3 + 3 + 3 + 3).
  EXPECT_EQ(dual_product_feasible(dims({3, 7}), 7).verdict, Verdict::kPass);
  EXPECT_THROW(dual_product_feasible(dims({3}), 4), InputError);
}

TEST(DualProduct, HugeTarget) {
  // Coins 3 and 9 reach exactly the multiples of 3.
  BigInt d("1000000000000000000001");
  FilterVerdict v = dual_product_feasible({BigInt(3), BigInt(9)}, d);
  BigInt target = (d * d - 1) / 2;
  EXPECT_EQ(v.discarded(), target % 3 != 0);
}

TEST(ForcedPointed, Examples) {
  EXPECT_TRUE(forced_pointed(387));
  EXPECT_TRUE(forced_pointed(603));
  EXPECT_FALSE(forced_pointed(9 * 25 * 49));
  EXPECT_FALSE(forced_pointed(243));
}

TEST(SolvableNeedsInvertible, Examples) {
  EXPECT_EQ(solvable_needs_invertible(3 * 5 * 7, dims({1, 3, 5})).verdict,
            Verdict::kNotApplicable);
  EXPECT_EQ(solvable_needs_invertible(9, dims({1, 1, 1, 1, 1, 1, 1, 1, 1})).verdict,
            Verdict::kPass);
  EXPECT_TRUE(solvable_needs_invertible(9 * 25, dims({1, 3, 3, 3, 3, 3, 3, 3, 3, 5, 5, 5, 5, 5,
                                                      5, 5, 5}))
                  .discarded());
}

TEST(SemidirectCondition, Examples) {
  EXPECT_TRUE(semidirect_condition(3, 7, 2));
  EXPECT_TRUE(semidirect_condition(5, 11, 2));
  EXPECT_FALSE(semidirect_condition(3, 5, 1));
  EXPECT_THROW(semidirect_condition(3, 3, 1), InputError);
  EXPECT_THROW(semidirect_condition(3, 5, 5), InputError);
}

// T1 through the whole-category chain, stage by stage.
TEST(FilterChain, Table1Stages) {
  const GoldenTable& t = table1();
  std::set<int> after_uniformity, after_fixed, after_deequiv, after_dual;
  std::set<int> uniformity_discards, deequiv_discards, dual_discards;
  for (size_t i = 0; i < t.rows.size(); ++i) {
    const int row = t.printed_rows[i];
    std::vector<FilterStep> trail = run_filter_chain(t.rows[i], rank25_layer());
    auto discarded_at = [&](const std::string& name) {
      return std::any_of(trail.begin(), trail.end(), [&](const FilterStep& s) {
        return s.filter == name && s.verdict.discarded();
      });
    };
    if (discarded_at("outside_dim_uniformity")) {
      uniformity_discards.insert(row);
      continue;
    }
    if (discarded_at("fixed_dim_multiplicity")) continue;
    after_fixed.insert(row);
    if (discarded_at("deequiv_consistency")) {
      deequiv_discards.insert(row);
      continue;
    }
    if (discarded_at("dual_product")) dual_discards.insert(row);
  }
  EXPECT_EQ(uniformity_discards, (std::set<int>{35}));
  EXPECT_EQ(after_fixed, (std::set<int>{9, 26, 27, 28, 29, 31, 32, 33, 34}));
  EXPECT_EQ(deequiv_discards, (std::set<int>{26, 27, 29, 31, 33}));
  EXPECT_EQ(dual_discards, (std::set<int>{9}));
}

TEST(FilterChain, Row34PassesEveryFilter) {
  std::vector<FilterStep> trail = run_filter_chain(table1().printed_row(34), rank25_layer());
  for (const FilterStep& s : trail) EXPECT_FALSE(s.verdict.discarded()) << s.filter;
  ASSERT_FALSE(trail.empty());
  EXPECT_EQ(trail.back().filter, "semidirect");
  EXPECT_EQ(trail.back().verdict.verdict, Verdict::kPass);
}

TEST(FilterChain, EveryDiscardIsCited) {
  for (const DimSolution& s : table1().rows) {
    for (const FilterStep& step : run_filter_chain(s, rank25_layer())) {
      if (step.verdict.discarded()) {
        EXPECT_FALSE(step.verdict.citation.empty()) << step.filter;
      }
    }
  }
}

}  // namespace
}  // namespace oddmtc
