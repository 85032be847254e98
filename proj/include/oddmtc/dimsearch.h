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

#ifndef ODDMTC_DIMSEARCH_H_
#define ODDMTC_DIMSEARCH_H_

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "oddmtc/exactmath.h"

namespace oddmtc {

enum class Mode { kBasic, kAdjoint };

// Thrown by enumerate when SearchParams::node_budget runs out.
class SearchBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Inputs of one search. In basic mode the layer is the whole category and
// `invertibles` is its invertible count. In adjoint mode `invertibles` is
// |G(C)| and the layer is the adjoint subcategory with `adjoint_rank` simples,
// `adjoint_invertibles` of them invertible.
struct SearchParams {
  Mode mode = Mode::kBasic;
  int64_t rank = 0;
  int64_t invertibles = 0;
  int64_t adjoint_rank = 0;
  int64_t adjoint_invertibles = 0;

  int64_t min_m1 = 1;
  bool m1_square = false;
  std::set<int64_t> m1_excluded;
  std::optional<int64_t> mi_coprime;  // a prime P; every m_i coprime to P
  int64_t min_run = 1;                // some run of >= min_run equal dims

  // Restricts output to fpdim <= bound and prunes accordingly.
  std::optional<BigInt> fpdim_bound;

  // Recursion nodes over all branches before enumerate gives up.
  std::optional<uint64_t> node_budget;

  // Number of worker threads over m1 branches; 0 or 1 runs inline.
  int jobs = 1;

  // Throws InputError when the invariants do not hold.
  void validate() const;

  int64_t layer_invertibles() const;  // s of the searched layer
  int64_t group_order() const;        // |G(C)|, 1 in basic mode
  int64_t pairs() const;              // k, number of dual pairs in the layer
  bool perfect() const;               // the perfect-case flag
};

struct DimSolution {
  BigInt fpdim;
  int64_t invertibles = 0;
  std::vector<BigInt> dims;       // non-increasing, one per dual pair
  std::vector<BigInt> quotients;  // m_i = fpdim / d_i^2

  bool operator==(const DimSolution&) const = default;
};

// Descending fpdim, then lexicographically descending dims.
bool canonical_less(const DimSolution& a, const DimSolution& b);
void canonical_sort(std::vector<DimSolution>& v);

// Builds a solution from fpdim and dims, deriving the quotients.
DimSolution make_solution(const BigInt& fpdim, int64_t invertibles, std::vector<BigInt> dims);

std::vector<int64_t> m1_candidates(const SearchParams& params);

struct Rational {
  BigInt num;
  BigInt den = 1;
};

struct LevelStep {
  BigInt u;
  Rational c;
};

// One recursion step: admissible odd u_next and the resulting c_next.
std::vector<LevelStep> next_level(const Rational& c_prev, const BigInt& u_prev, int64_t remaining,
                                  const SearchParams& params);

struct SearchStats {
  uint64_t nodes = 0;
  uint64_t overflow_retries = 0;  // m1 branches redone in big integers
};

std::vector<DimSolution> enumerate(const SearchParams& params, SearchStats* stats = nullptr);

// Checks the DimSolution invariants against the layer described by `params`
// (equation, oddness, m_i integrality, congruence, ordering). Returns an
// empty string when they hold, otherwise the first violation.
std::string invariant_violation(const DimSolution& solution, const SearchParams& params);

// Solution-level predicate the search applies after the recursion.
bool has_equal_run(const std::vector<BigInt>& dims, int64_t length);

std::string describe(const SearchParams& params);

}  // namespace oddmtc

#endif  // ODDMTC_DIMSEARCH_H_
