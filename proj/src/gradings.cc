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

#include <algorithm>
#include <map>
#include <sstream>

#include "oddmtc/exactmath.h"

namespace oddmtc {
namespace {

std::vector<int64_t> prime_divisors(int64_t n) {
  std::vector<int64_t> out;
  for (const PrimePower& pp : factorize(BigInt(n))) out.push_back(static_cast<int64_t>(pp.prime));
  return out;
}

void collect(int64_t remaining, int64_t slots, int64_t largest, std::vector<int64_t>& parts,
             std::vector<std::vector<int64_t>>& out) {
  if (slots == 0) {
    if (remaining == 0) out.push_back(parts);
    return;
  }
  // Every later part is at least the residue of the first one.
  int64_t floor = parts.empty() ? 1 : parts.front() % 8;
  if (remaining < slots * floor) return;
  int64_t top = std::min(largest, remaining - (slots - 1) * floor);
  for (int64_t x = top; x >= 1; --x) {
    if (x % 2 == 0) continue;
    if (!parts.empty() && (x - parts.front()) % 8 != 0) continue;
    parts.push_back(x);
    collect(remaining - x, slots - 1, x, parts, out);
    parts.pop_back();
  }
}

}  // namespace

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "PASS";
    case Verdict::kDiscard:
      return "DISCARD";
    case Verdict::kNotApplicable:
      return "NOT_APPLICABLE";
  }
  return "?";
}

void GradingCase::validate() const {
  if (rank < 1 || rank % 2 == 0) throw InputError("grading case: rank must be odd and positive");
  if (static_cast<int64_t>(component_ranks.size()) != invertibles) {
    throw InputError("grading case: one component per invertible object expected");
  }
  int64_t sum = 0;
  for (int64_t r : component_ranks) {
    if (r < 1 || r % 2 == 0) throw InputError("grading case: component ranks must be odd");
    if ((r - component_ranks.front()) % 8 != 0) {
      throw InputError("grading case: component ranks must agree mod 8");
    }
    sum += r;
  }
  if (sum != rank) throw InputError("grading case: component ranks must sum to the rank");
  if (!std::is_sorted(component_ranks.begin(), component_ranks.end(), std::greater<>())) {
    throw InputError("grading case: component ranks must be non-increasing");
  }
}

std::optional<int64_t> GradingCase::odd_multiplicity_rank() const {
  std::map<int64_t, int64_t> counts;
  for (int64_t r : component_ranks) ++counts[r];
  std::optional<int64_t> found;
  for (const auto& [r, n] : counts) {
    if (n % 2 == 0) continue;
    if (found) return std::nullopt;
    found = r;
  }
  return found;
}

int64_t GradingCase::count(int64_t component_rank) const {
  return std::count(component_ranks.begin(), component_ranks.end(), component_rank);
}

std::string GradingCase::to_string() const {
  std::ostringstream os;
  os << '{';
  for (size_t i = 0; i < component_ranks.size(); ++i) {
    if (i > 0) os << ',';
    os << component_ranks[i];
  }
  os << '}';
  return os.str();
}

std::vector<int64_t> invertible_count_candidates(int64_t rank) {
  if (rank < 1 || rank % 2 == 0) throw InputError("rank must be odd and positive");
  std::vector<int64_t> out;
  for (int64_t s = 1; s <= rank; s += 2) {
    for (int64_t m = 1; s * m <= rank; ++m) {
      if ((rank - s * m) % 8 == 0) {
        out.push_back(s);
        break;
      }
    }
  }
  return out;
}

std::vector<GradingCase> enumerate_cases(int64_t rank, int64_t invertibles) {
  std::vector<int64_t> candidates = invertible_count_candidates(rank);
  if (std::find(candidates.begin(), candidates.end(), invertibles) == candidates.end()) {
    throw InputError("invertible count " + std::to_string(invertibles) +
                     " is not a candidate for rank " + std::to_string(rank));
  }
  std::vector<std::vector<int64_t>> parts_list;
  std::vector<int64_t> parts;
  collect(rank, invertibles, rank, parts, parts_list);
  std::vector<GradingCase> out;
  for (auto& p : parts_list) out.push_back({rank, invertibles, std::move(p)});
  return out;
}

FilterVerdict filter_min_three_components(const GradingCase& c) {
  if (c.invertibles <= 1) return FilterVerdict::not_applicable("trivial_pointed_part");
  for (int64_t p : prime_divisors(c.invertibles)) {
    int64_t big = std::count_if(c.component_ranks.begin(), c.component_ranks.end(),
                                [p](int64_t r) { return r >= p; });
    if (big >= 3) return FilterVerdict::pass();
  }
  return FilterVerdict::discard("fewer_than_three_components", kLemmaRankMoreThanOne);
}

FilterVerdict filter_divisibility(const GradingCase& c) {
  if (!is_prime(BigInt(c.invertibles))) {
    return FilterVerdict::not_applicable("invertible_count_not_prime");
  }
  const int64_t p = c.invertibles;
  std::vector<int64_t> odd_ones;
  for (int64_t r : c.component_ranks) {
    if (r % p != 0) odd_ones.push_back(r);
  }
  if (odd_ones.size() > 1) {
    return FilterVerdict::discard("several_ranks_not_divisible", kLemmaNotDivisible);
  }
  if (odd_ones.size() == 1 && c.odd_multiplicity_rank() != odd_ones.front()) {
    return FilterVerdict::discard("non_divisible_rank_not_adjoint", kLemmaNotDivisible);
  }
  return FilterVerdict::pass();
}

FilterVerdict filter_odd_multiplicity(const GradingCase& c) {
  if (c.invertibles <= 1) return FilterVerdict::not_applicable("trivial_pointed_part");
  std::optional<int64_t> adjoint = c.odd_multiplicity_rank();
  if (!adjoint) return FilterVerdict::discard("no_unique_odd_multiplicity", kLemmaOddComponents);
  if (*adjoint == 1) return FilterVerdict::discard("adjoint_rank_one", kLemmaOddComponents);
  return FilterVerdict::pass();
}

FilterVerdict filter_equal_rank_components(const GradingCase& c,
                                           int64_t assumed_adjoint_invertibles) {
  if (assumed_adjoint_invertibles < 1 || c.invertibles % assumed_adjoint_invertibles != 0) {
    throw InputError("assumed |G(C_ad)| must divide the invertible count");
  }
  if (assumed_adjoint_invertibles == c.invertibles) return FilterVerdict::pass();
  std::optional<int64_t> adjoint = c.odd_multiplicity_rank();
  if (!adjoint) return FilterVerdict::not_applicable("adjoint_rank_undetermined");
  if (c.count(*adjoint) < 3) {
    return FilterVerdict::discard("fewer_than_three_adjoint_rank", kCorollaryThreeComponents);
  }
  return FilterVerdict::pass();
}

std::vector<int64_t> feasible_adjoint_orders(const GradingCase& c) {
  std::vector<int64_t> out;
  std::optional<int64_t> adjoint = c.odd_multiplicity_rank();
  if (c.invertibles <= 1 || !adjoint) return out;
  const int64_t r_ad = *adjoint;
  const int64_t same = c.count(r_ad);
  for (int64_t a = 3; a <= c.invertibles; a += 2) {
    if (c.invertibles % a != 0 || a > r_ad) continue;
    const int64_t holders = c.invertibles / a;
    if (same < holders) continue;
    if (a == r_ad) {
      // C_ad is pointed, so every component has FPdim a. A component of rank
      // a is then pointed too, and any other needs 9 per simple.
      if (same != holders) continue;
      if (std::any_of(c.component_ranks.begin(), c.component_ranks.end(),
                      [&](int64_t r) { return r != r_ad && 9 * r > a; })) {
        continue;
      }
    }
    for (int64_t p : prime_divisors(a)) {
      bool spare_adjoint_rank = same > holders && r_ad >= p;
      bool other_holder = holders > 1 && r_ad - a >= p;
      bool other_rank = std::any_of(c.component_ranks.begin(), c.component_ranks.end(),
                                    [&](int64_t r) { return r != r_ad && r >= p; });
      if (spare_adjoint_rank || other_holder || other_rank) {
        out.push_back(a);
        break;
      }
    }
  }
  return out;
}

FilterVerdict filter_invertible_placement(const GradingCase& c) {
  if (c.invertibles <= 1) return FilterVerdict::not_applicable("trivial_pointed_part");
  if (!c.odd_multiplicity_rank()) return FilterVerdict::not_applicable("adjoint_rank_undetermined");
  if (!feasible_adjoint_orders(c).empty()) return FilterVerdict::pass();
  return FilterVerdict::discard("no_invertible_placement",
                                std::string(kPropositionEqualRank) + "; " + kLemmaRankMoreThanOne);
}

bool CaseVerdicts::survives() const {
  return std::none_of(trail.begin(), trail.end(),
                      [](const auto& entry) { return entry.second.discarded(); });
}

CaseVerdicts apply_grading_filters(const GradingCase& c) {
  CaseVerdicts out{c, {}};
  out.trail.emplace_back("min_three_components", filter_min_three_components(c));
  out.trail.emplace_back("divisibility", filter_divisibility(c));
  out.trail.emplace_back("odd_multiplicity", filter_odd_multiplicity(c));
  out.trail.emplace_back("invertible_placement", filter_invertible_placement(c));
  return out;
}

}  // namespace oddmtc
