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

#ifndef ODDMTC_CLASSIFY_H_
#define ODDMTC_CLASSIFY_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oddmtc/dimsearch.h"
#include "oddmtc/filters.h"
#include "oddmtc/gradings.h"

namespace oddmtc {

enum class ItemStatus { kSurvives, kDiscarded, kNeedsManualAnalysis };
const char* status_name(ItemStatus s);  // "SURVIVES", "DISCARDED", "NEEDS_MANUAL_ANALYSIS"

struct FilterStep {
  std::string filter;
  FilterVerdict verdict;
};

// What the searched layer is, and so which structural filters apply.
enum class LayerKind {
  kWholeUniform,  // basic search, |G(C)| = p prime, every non-adjoint rank p
  kWhole,         // basic search, any other grading shape
  kAdjoint,       // adjoint search; dims are those of C_ad
};

struct LayerContext {
  LayerKind kind = LayerKind::kWhole;
  GradingCase grading;
  int64_t group_order = 1;        // |G(C)|
  int64_t adjoint_invertibles = 1;  // |G(C_ad)|
};

// Applies the structural filters in pipeline order and stops at the first
// discard. Filter names: outside_dim_uniformity, fixed_dim_multiplicity,
// deequiv_consistency, dual_product, component_packing, deequiv_layer,
// forced_pointed, semidirect.
std::vector<FilterStep> run_filter_chain(const DimSolution& solution, const LayerContext& layer);

// Non-invertible dual-pair dims of C_ad and FPdim(C_ad) for a solution.
struct AdjointPart {
  std::vector<BigInt> dims;
  BigInt fpdim;
};
std::optional<AdjointPart> adjoint_part(const DimSolution& solution, const LayerContext& layer);

struct SolutionItem {
  DimSolution solution;
  std::vector<FilterStep> trail;
  ItemStatus status = ItemStatus::kNeedsManualAnalysis;
};

struct SearchRun {
  std::string label;  // golden table id when the run mirrors one, else empty
  SearchParams params;
  // DISCARD when the search is empty, NOT_APPLICABLE when it ran out of
  // budget, PASS otherwise.
  FilterVerdict outcome;
  std::vector<SolutionItem> items;
};

struct CaseReport {
  CaseVerdicts grading;
  ItemStatus status = ItemStatus::kNeedsManualAnalysis;
  std::string note;
  std::vector<SearchRun> searches;
};

struct HypothesisReport {
  int64_t invertibles = 0;
  std::string kind;  // pointed, perfect, graded
  ItemStatus status = ItemStatus::kNeedsManualAnalysis;
  std::string note;
  std::vector<FilterStep> trail;
  std::optional<SearchRun> search;  // perfect hypothesis only
  std::vector<CaseReport> cases;
};

struct ClassificationReport {
  int64_t rank = 0;
  std::vector<int64_t> candidates;
  std::vector<std::string> assumptions;
  std::vector<HypothesisReport> hypotheses;
};

struct ClassifyOptions {
  int jobs = 1;
  // Node budget of each search not fixed by a table recipe. A search that
  // runs out leaves its case NEEDS_MANUAL_ANALYSIS.
  uint64_t node_budget = 200'000'000;
};

// Throws InputError unless rank is odd and 17 <= rank <= 49.
ClassificationReport classify(int64_t rank, const ClassifyOptions& options = {});

}  // namespace oddmtc

#endif  // ODDMTC_CLASSIFY_H_
