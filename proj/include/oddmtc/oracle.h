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

#ifndef ODDMTC_ORACLE_H_
#define ODDMTC_ORACLE_H_

#include <string>
#include <vector>

#include "oddmtc/dimsearch.h"

namespace oddmtc {

// Brute force over fpdim values. Besides the layer equation it applies the
// lower bound m1 >= |G(C)| and the caller's predicates (min_m1, m1_square,
// m1_excluded, mi_coprime, min_run), and nothing of the search's recursion.
std::vector<DimSolution> oracle_enumerate(const SearchParams& params, const BigInt& fpdim_bound);

struct SolutionDiff {
  enum class Kind { kMissing, kExtra };
  Kind kind;
  DimSolution solution;
};

struct DiffReport {
  std::vector<SolutionDiff> entries;  // missing first, then extra; canonical within each
  bool empty() const { return entries.empty(); }
  size_t missing() const;
  size_t extra() const;
};

// MISSING: in `reference` but not in `candidate`. EXTRA: the converse.
DiffReport diff_solutions(std::vector<DimSolution> candidate, std::vector<DimSolution> reference);

// Restricts the search output to fpdim <= bound, then diffs against the oracle.
DiffReport compare(const std::vector<DimSolution>& search_out,
                   const std::vector<DimSolution>& oracle_out, const BigInt& fpdim_bound);

std::string format_row(const DimSolution& s);  // "441: 7 7 7 3 3 3 3 3 3 3 3"

}  // namespace oddmtc

#endif  // ODDMTC_ORACLE_H_
