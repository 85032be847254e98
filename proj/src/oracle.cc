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

#include "oddmtc/oracle.h"

#include <algorithm>
#include <limits>
#include <sstream>

namespace oddmtc {
namespace {

bool prime_power(uint64_t n) {
  for (uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    return n == 1;
  }
  return n > 1;
}

struct Picker {
  const std::vector<uint64_t>& dims;  // admissible, descending
  uint64_t fpdim;
  const SearchParams& params;
  std::vector<uint64_t> chosen;
  std::vector<DimSolution>* out;

  void pick(size_t from, int64_t left, uint64_t sum_left) {
    if (left == 0) {
      if (sum_left == 0) accept();
      return;
    }
    for (size_t i = from; i < dims.size(); ++i) {
      const uint64_t d2 = dims[i] * dims[i];
      if (d2 > sum_left) continue;
      // Everything after this pick is at most d2.
      if (d2 * static_cast<uint64_t>(left) < sum_left) return;
      chosen.push_back(dims[i]);
      pick(i, left - 1, sum_left - d2);
      chosen.pop_back();
    }
  }

  void accept() {
    std::vector<BigInt> big(chosen.begin(), chosen.end());
    if (!has_equal_run(big, params.min_run)) return;
    uint64_t m1 = fpdim / (chosen.front() * chosen.front());
    // m1 >= |G(C)| comes from the grading, not from the layer equation.
    if (static_cast<int64_t>(m1) < std::max(params.min_m1, params.invertibles)) return;
    if (params.m1_excluded.count(static_cast<int64_t>(m1))) return;
    if (params.m1_square) {
      uint64_t r = isqrt_u64(m1);
      if (r * r != m1) return;
    }
    if (params.mi_coprime) {
      const uint64_t p = static_cast<uint64_t>(*params.mi_coprime);
      for (uint64_t d : chosen) {
        if ((fpdim / (d * d)) % p == 0) return;
      }
    }
    out->push_back(make_solution(BigInt(fpdim), params.layer_invertibles(), std::move(big)));
  }
};

}  // namespace

std::vector<DimSolution> oracle_enumerate(const SearchParams& params, const BigInt& fpdim_bound) {
  params.validate();
  if (fpdim_bound < params.invertibles) throw InputError("oracle: bound below the invertible count");
  if (fpdim_bound > BigInt(1) << 40) throw InputError("oracle: bound above 2^40 is not supported");
  const auto bound = static_cast<uint64_t>(fpdim_bound);
  const uint64_t group = static_cast<uint64_t>(params.group_order());
  const uint64_t s = static_cast<uint64_t>(params.layer_invertibles());
  const int64_t k = params.pairs();
  const bool perfect = params.perfect();

  // square_divs[n] lists the odd d >= 3 with d^2 | n, for odd n <= bound.
  std::vector<std::vector<uint32_t>> square_divs(bound / 2 + 1);
  for (uint64_t d = 3; d * d <= bound; d += 2) {
    for (uint64_t n = d * d; n <= bound; n += 2 * d * d) square_divs[n / 2].push_back(d);
  }

  std::vector<DimSolution> out;
  const uint64_t residue = static_cast<uint64_t>(params.rank % 8);
  for (uint64_t fpdim = residue; fpdim <= bound; fpdim += 8) {
    if (fpdim == 0 || fpdim % group != 0) continue;
    const uint64_t layer = fpdim / group;
    if (layer <= s || (layer - s) % 2 != 0) continue;
    std::vector<uint64_t> dims;
    for (uint32_t d : square_divs[fpdim / 2]) {
      if (perfect && (d < 15 || prime_power(d))) continue;
      dims.push_back(d);
    }
    std::reverse(dims.begin(), dims.end());
    Picker picker{dims, fpdim, params, {}, &out};
    picker.pick(0, k, (layer - s) / 2);
  }
  canonical_sort(out);
  return out;
}

size_t DiffReport::missing() const {
  return std::count_if(entries.begin(), entries.end(),
                       [](const SolutionDiff& e) { return e.kind == SolutionDiff::Kind::kMissing; });
}

size_t DiffReport::extra() const { return entries.size() - missing(); }

DiffReport diff_solutions(std::vector<DimSolution> candidate, std::vector<DimSolution> reference) {
  canonical_sort(candidate);
  canonical_sort(reference);
  DiffReport report;
  std::vector<DimSolution> only;
  std::set_difference(reference.begin(), reference.end(), candidate.begin(), candidate.end(),
                      std::back_inserter(only), canonical_less);
  for (auto& s : only) report.entries.push_back({SolutionDiff::Kind::kMissing, std::move(s)});
  only.clear();
  std::set_difference(candidate.begin(), candidate.end(), reference.begin(), reference.end(),
                      std::back_inserter(only), canonical_less);
  for (auto& s : only) report.entries.push_back({SolutionDiff::Kind::kExtra, std::move(s)});
  return report;
}

DiffReport compare(const std::vector<DimSolution>& search_out,
                   const std::vector<DimSolution>& oracle_out, const BigInt& fpdim_bound) {
  std::vector<DimSolution> restricted;
  for (const DimSolution& s : search_out) {
    if (s.fpdim <= fpdim_bound) restricted.push_back(s);
  }
  return diff_solutions(std::move(restricted), oracle_out);
}

std::string format_row(const DimSolution& s) {
  std::ostringstream os;
  os << s.fpdim << ':';
  for (const BigInt& d : s.dims) os << ' ' << d;
  return os.str();
}

}  // namespace oddmtc
