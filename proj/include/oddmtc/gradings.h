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

#ifndef ODDMTC_GRADINGS_H_
#define ODDMTC_GRADINGS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oddmtc/verdict.h"

namespace oddmtc {

// Citation strings carried by grading verdicts.
inline constexpr const char kLemmaRankMoreThanOne[] = "Lemma \"rank more than 1\"";
inline constexpr const char kLemmaNotDivisible[] = "Lemma \"rank not divisible by p\"";
inline constexpr const char kLemmaOddComponents[] = "Lemma \"odd number of components of rank\"";
inline constexpr const char kCorollaryThreeComponents[] =
    "Corollary \"three components rank Cad\"";
inline constexpr const char kPropositionEqualRank[] =
    "Proposition \"invertible implies equal rank\"";

// Ranks of the universal grading components, one per invertible object.
struct GradingCase {
  int64_t rank = 0;
  int64_t invertibles = 0;
  std::vector<int64_t> component_ranks;  // non-increasing

  bool operator==(const GradingCase&) const = default;

  // Throws InputError unless the invariants hold.
  void validate() const;
  // The unique rank occurring an odd number of times, if there is one.
  std::optional<int64_t> odd_multiplicity_rank() const;
  int64_t count(int64_t component_rank) const;
  std::string to_string() const;  // "{19,3,3}"
};

std::vector<int64_t> invertible_count_candidates(int64_t rank);

// Canonical order: each multiset descending, cases lexicographically descending.
std::vector<GradingCase> enumerate_cases(int64_t rank, int64_t invertibles);

FilterVerdict filter_min_three_components(const GradingCase& c);
FilterVerdict filter_divisibility(const GradingCase& c);
FilterVerdict filter_odd_multiplicity(const GradingCase& c);
FilterVerdict filter_equal_rank_components(const GradingCase& c,
                                           int64_t assumed_adjoint_invertibles);

// Orders a > 1 of G(C_ad) dividing |G(C)| that fit the case, ascending. The
// invertibles fill |G(C)|/a components of the adjoint rank, a per component,
// and some non-trivial component still needs p non-invertibles for a prime
// p | a.
// When a equals the adjoint rank, C_ad is pointed and every component has
// FPdim a. The placement filter discards when none is feasible.
std::vector<int64_t> feasible_adjoint_orders(const GradingCase& c);
FilterVerdict filter_invertible_placement(const GradingCase& c);

struct CaseVerdicts {
  GradingCase grading;
  std::vector<std::pair<std::string, FilterVerdict>> trail;  // filter name, verdict
  bool survives() const;
};

// Runs every lemma filter; the case survives when none discards.
CaseVerdicts apply_grading_filters(const GradingCase& c);

}  // namespace oddmtc

#endif  // ODDMTC_GRADINGS_H_
