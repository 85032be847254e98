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

#ifndef ODDMTC_FILTERS_H_
#define ODDMTC_FILTERS_H_

#include <cstdint>
#include <vector>

#include "oddmtc/dimsearch.h"
#include "oddmtc/gradings.h"
#include "oddmtc/verdict.h"

namespace oddmtc {

inline constexpr const char kLemmaFixedDims[] = "Lemma \"fixeddims\"";
inline constexpr const char kRemarkFixedDivisible[] = "Remark \"fixed fpdim divisible by p\"";
inline constexpr const char kLemmaDeequiv[] = "Lemma \"deequiv\"";
inline constexpr const char kCorollarySameDim[] = "Corollary \"same dim outside Cad\"";
inline constexpr const char kPackingCitation[] = "[ENO1, Proposition 8.20]";
inline constexpr const char kDualProductCitation[] = "X \\otimes X^* = 1 + \\sum_i 2 N_i X_i";
inline constexpr const char kPointedCitation[] = "[DN, Corollary 4.13]";
inline constexpr const char kSolvableCitation[] = "[ENO2, Theorem 1.6]; [ENO2, Proposition 4.5]";
inline constexpr const char kSemidirectCitation[] = "Proposition \"semidirect product\"";

// One entry per simple object: every dual-pair dim twice, non-increasing.
std::vector<BigInt> full_multiset(const std::vector<BigInt>& pair_dims);

FilterVerdict fixed_dim_multiplicity_filter(const DimSolution& solution, int64_t p);
// Same rule on a bare list of dual-pair dims.
FilterVerdict fixed_dim_multiplicity_filter(const std::vector<BigInt>& pair_dims, int64_t p);

struct DeequivProfile {
  int64_t prime = 0;
  std::vector<BigInt> fixed_dims;           // objects fixed by Z_p
  std::vector<BigInt> nonfixed_orbit_dims;  // one entry per orbit of p objects
  BigInt invertible_count;
  BigInt deequiv_fpdim;
  std::vector<BigInt> result_dims;  // every simple of the quotient, unit included
  int64_t result_rank = 0;
};

// All fixed/non-fixed assignments on the objects of C_ad, given its
// non-invertible dual-pair dims. Non-fixed counts per dim are multiples of 2p.
std::vector<DeequivProfile> deequiv_profiles(const std::vector<BigInt>& adjoint_dims, int64_t p,
                                             const BigInt& adjoint_fpdim);

FilterVerdict deequiv_consistency_filter(const DeequivProfile& profile);

FilterVerdict outside_dim_uniformity(const DimSolution& solution, const GradingCase& grading);

FilterVerdict component_packing_feasible(const DimSolution& solution, const GradingCase& grading);

FilterVerdict dual_product_feasible(const std::vector<BigInt>& available_dims, const BigInt& d);

bool forced_pointed(const BigInt& fpdim);

// `dims` lists every simple of the layer, the unit included.
FilterVerdict solvable_needs_invertible(const BigInt& fpdim, const std::vector<BigInt>& dims);

bool semidirect_condition(int64_t p, int64_t q, int a);

}  // namespace oddmtc

#endif  // ODDMTC_FILTERS_H_
